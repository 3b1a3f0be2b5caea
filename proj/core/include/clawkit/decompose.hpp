#ifndef CLAWKIT_DECOMPOSE_HPP
#define CLAWKIT_DECOMPOSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "clawkit/graph.hpp"

namespace clawkit {

/// A pair of graphs with equal 3-homogeneous triple sets whose boolean sum
/// is u; verify_decomposition re-checks both invariants.
struct Decomposition {
    Graph g;
    Graph gp;
    Graph u;
};

/// Both edge-graphs S(u) and S(complement(u)) are bipartite. u.order() <= 64.
bool property2(const Graph& u);

/// Which disjunct admits u: every component of u is a path or an even cycle;
/// failing that, the same for complement(u); failing that, an induced
/// embedding into the 3x3 rook's graph. Checked in that order, so the tag is
/// deterministic where cases overlap.
struct Property3 {
    enum class Case { none, components, complement_components, p9_induced };
    Case tag = Case::none;
    std::vector<ComponentShape> shapes;  // component cases: shapes of u resp. complement(u)
    std::vector<int> p9_embedding;       // p9 case only

    bool holds() const { return tag != Case::none; }
};
Property3 property3(const Graph& u);

/// Building blocks on vertices x_0..x_{n-1}: all pairs within the
/// even-index class and within the odd-index class, plus a matching.
/// path_summand_a(n) + path_summand_b(n) sum to the path x_0-...-x_{n-1};
/// path_summand_a(n) + cycle_summand_b(n) sum to the n-cycle (n even >= 4).
Graph path_summand_a(int n);   // matching {x_0x_1, x_2x_3, ...}; n >= 1
Graph path_summand_b(int n);   // matching {x_1x_2, x_3x_4, ...}; n >= 1
Graph cycle_summand_b(int n);  // path_summand_b plus the closing edge x_0x_{n-1}

/// The per-component construction: each path/even-cycle component of u (or
/// of complement(u) in the complement case) is aligned with x_0..x_{k-1}
/// along its walk order and decomposed by the summand pairs above;
/// cross-component pairs are edges of both output graphs exactly when both
/// endpoints sit in equal parity classes. Absent unless property3 holds via
/// a component case.
std::optional<Decomposition> decompose_explicit(const Graph& u);

/// The bipartition construction: 2-color S(u) and S(complement(u)); edges of
/// u colored 0 go to g, those colored 1 to gp, and edges of complement(u)
/// colored 0 go to both. Absent iff property2 fails.
std::optional<Decomposition> decompose_generic(const Graph& u);

/// Routes by property3 case: component cases use decompose_explicit, the
/// rook-graph case uses decompose_generic.
std::optional<Decomposition> decompose(const Graph& u);

bool verify_decomposition(const Decomposition& d);

/// Three graph6 lines (g, gp, u), then "ok" or "invalid".
std::string format_decomposition(const Decomposition& d);

}  // namespace clawkit

#endif  // CLAWKIT_DECOMPOSE_HPP
