#ifndef CLAWKIT_STRUCTURE_HPP
#define CLAWKIT_STRUCTURE_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clawkit/graph.hpp"

namespace clawkit {

/// Induced claw witness: center adjacent to three pairwise non-adjacent
/// leaves. For a co-claw witness the same shape is read in the complement:
/// the leaves form a triangle avoiding the center.
struct ClawWitness {
    int center = 0;
    std::array<int, 3> leaves{};
};

/// First induced claw in lexicographic 4-subset order, or nullopt.
std::optional<ClawWitness> find_claw(const Graph& g);
std::optional<ClawWitness> find_co_claw(const Graph& g);

/// First 4-subset inducing exactly five edges (K4 minus an edge), ascending.
std::optional<std::array<int, 4>> find_diamond(const Graph& g);

/// Neither a claw nor a co-claw occurs as an induced subgraph.
bool in_forb_claw_coclaw(const Graph& g);

/// No claw and no diamond: exactly the line graphs of triangle-free graphs.
bool is_claw_diamond_free(const Graph& g);

// ---------------------------------------------------------------------------
// Certificates for membership in Forb{claw, co-claw}.

struct NotInClass {
    bool co = false;  // witness is a co-claw rather than a claw
    ClawWitness witness;
};
struct IsA6 {
    std::vector<int> iso;  // bijection onto a6()
};
struct IsCoA6 {
    std::vector<int> iso;  // bijection onto complement(a6())
};
struct P9Induced {
    std::vector<int> embedding;  // induced embedding into p9()
};
struct LinearForestOrCycles {
    // Components in walk order (paths endpoint to endpoint, cycles starting
    // at their smallest vertex), listed by smallest contained vertex.
    std::vector<std::vector<int>> components;
    std::vector<ComponentShape> shapes;  // Path(k) or Cycle(k >= 4), parallel
};
using InnerCertificate = std::variant<IsA6, IsCoA6, P9Induced, LinearForestOrCycles>;
struct ComplementCase {
    InnerCertificate inner;  // positive certificate for complement(g)
};

/// Exactly one case; every witness re-verifies against the input graph via
/// verify_certificate.
using Certificate =
    std::variant<NotInClass, IsA6, IsCoA6, P9Induced, LinearForestOrCycles, ComplementCase>;

/// Total, deterministic classification. NotInClass exactly when a claw or
/// co-claw occurs; otherwise the positive cases are searched in a fixed
/// priority order: A6 / co-A6 isomorphism, induced embedding into P9,
/// path/cycle component scan of g, then of complement(g).
Certificate classify_theorem1(const Graph& g);

/// Re-checks a certificate edge by edge against g.
bool verify_certificate(const Graph& g, const Certificate& cert);

bool is_positive(const Certificate& cert);

/// Line-oriented text form: tag line, then witness lines ("i->j" mappings or
/// per-component "Path(k): v0 v1 ..." lists).
std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);  // throws std::invalid_argument

}  // namespace clawkit

#endif  // CLAWKIT_STRUCTURE_HPP
