#ifndef CLAWKIT_ISOMORPHISM_HPP
#define CLAWKIT_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "clawkit/graph.hpp"

namespace clawkit {

/// Injection f with pattern(x,y) an edge iff host(f(x),f(y)) an edge, for
/// all pairs x,y of pattern vertices, or nullopt. Backtracking search with
/// degree pruning, meant for small patterns (<= 9 vertices).
std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& host);

/// Adjacency-preserving bijection g -> h, or nullopt. Backtracking with
/// degree and neighbor-degree pruning; meant for n <= 12.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace clawkit

#endif  // CLAWKIT_ISOMORPHISM_HPP
