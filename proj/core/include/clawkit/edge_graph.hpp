#ifndef CLAWKIT_EDGE_GRAPH_HPP
#define CLAWKIT_EDGE_GRAPH_HPP

#include <string>
#include <vector>

#include "clawkit/graph.hpp"

namespace clawkit {

/// A graph whose vertices carry edge labels from an originating graph.
/// Labels are pairwise distinct and base.order() == labels.size().
struct LabeledGraph {
    Graph base;
    std::vector<VertexPair> labels;
};

/// Edge-graph S(U): one vertex per edge of U, in lexicographic label order.
/// Two are adjacent iff they share exactly one endpoint and their other
/// endpoints are non-adjacent in U. Requires U.order() <= 64, so the result
/// fits within the 2048-vertex graph cap.
LabeledGraph edge_graph(const Graph& u);

/// Claw-freeness of U coincides with triangle-freeness of S(U); returns that
/// equality, so any false return exposes a bug in one of the two sides.
bool star_equivalence_check(const Graph& u);

/// graph6 of the base graph, then one "i:(u,v)" label line per vertex.
std::string format_labeled_graph(const LabeledGraph& lg);

std::string to_dot(const LabeledGraph& lg);

}  // namespace clawkit

#endif  // CLAWKIT_EDGE_GRAPH_HPP
