#ifndef CLAWKIT_ENUMERATE_HPP
#define CLAWKIT_ENUMERATE_HPP

#include <cstdint>
#include <stdexcept>

#include "clawkit/graph.hpp"

namespace clawkit {

inline constexpr int max_enumeration_order = 8;

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2). Throws for n > 8.
std::uint64_t labeled_graph_count(int n);

/// Graph whose edge bitmask (colex pair order, bit i = pair_unrank(i)) is
/// `mask`, and the inverse.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

namespace detail {
void check_enumeration_args(int n, std::uint64_t begin, std::uint64_t end);
}

/// Calls f(g, mask) for every mask in [begin, end) in increasing order.
/// The Graph reference is reused between calls; copy it to keep it.
/// Disjoint ranges enumerate disjoint graphs, which is how the verification
/// suites shard work across threads.
template <typename F>
void enumerate_graph_range(int n, std::uint64_t begin, std::uint64_t end, F&& f) {
    detail::check_enumeration_args(n, begin, end);
    if (begin >= end) return;
    const int nbits = n * (n - 1) / 2;
    Graph g = graph_from_mask(n, begin);
    for (std::uint64_t mask = begin;;) {
        f(static_cast<const Graph&>(g), mask);
        if (++mask == end) break;
        // Incremental update: flip exactly the bits that changed.
        std::uint64_t changed = mask ^ (mask - 1);
        for (int bit = 0; changed != 0 && bit < nbits; ++bit, changed >>= 1) {
            if (changed & 1) {
                const VertexPair e = pair_unrank(bit);
                g.flip_edge(e.lo, e.hi);
            }
        }
    }
}

/// All 2^(n(n-1)/2) graphs on n labeled vertices in increasing edge-bitmask
/// order, each exactly once.
template <typename F>
void enumerate_graphs(int n, F&& f) {
    enumerate_graph_range(n, 0, labeled_graph_count(n), std::forward<F>(f));
}

}  // namespace clawkit

#endif  // CLAWKIT_ENUMERATE_HPP
