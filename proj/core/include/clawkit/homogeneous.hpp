#ifndef CLAWKIT_HOMOGENEOUS_HPP
#define CLAWKIT_HOMOGENEOUS_HPP

#include <array>
#include <string>
#include <vector>

#include "clawkit/graph.hpp"

namespace clawkit {

/// The 3-element vertex subsets inducing a triangle or an independent set,
/// each ascending, listed in lexicographic order.
struct TripleSet {
    int n = 0;
    std::vector<std::array<int, 3>> members;

    bool operator==(const TripleSet&) const = default;
};

TripleSet homogeneous_triples(const Graph& g);

/// Set equality of the two triple sets. Throws std::invalid_argument when
/// the orders differ.
bool same_3_homogeneous(const Graph& g, const Graph& h);

/// For every unordered triple {x,y,z} in every role assignment:
/// u(xy) = u(xz) != u(yz) implies g(xy) != g(xz). Same-order precondition.
bool lemma3_condition_b(const Graph& g, const Graph& u);

/// The edges of u split into u-and-g edges versus u-not-g edges; both parts
/// must be independent in S(u), and likewise for the complement of u in
/// S(complement(u)). Equivalently every edge of either edge-graph joins a
/// g-edge to a g-non-edge. Same-order precondition.
bool lemma3_condition_c(const Graph& g, const Graph& u);

/// One line "a b c" per triple.
std::string format_triples(const TripleSet& triples);

}  // namespace clawkit

#endif  // CLAWKIT_HOMOGENEOUS_HPP
