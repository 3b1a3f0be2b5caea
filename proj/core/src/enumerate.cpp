#include "clawkit/enumerate.hpp"

namespace clawkit {

std::uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > max_enumeration_order)
        throw std::invalid_argument("labeled_graph_count: n must be 0..8");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    if (n < 0 || n > max_enumeration_order)
        throw std::invalid_argument("graph_from_mask: n must be 0..8");
    Graph g(n);
    const int nbits = n * (n - 1) / 2;
    for (int bit = 0; bit < nbits; ++bit) {
        if ((mask >> bit) & 1) {
            const VertexPair e = pair_unrank(bit);
            g.add_edge(e.lo, e.hi);
        }
    }
    return g;
}

std::uint64_t mask_from_graph(const Graph& g) {
    if (g.order() > max_enumeration_order)
        throw std::invalid_argument("mask_from_graph: order must be 0..8");
    std::uint64_t mask = 0;
    for (int hi = 1; hi < g.order(); ++hi)
        for (int lo = 0; lo < hi; ++lo)
            if (g.has_edge(lo, hi)) mask |= std::uint64_t{1} << pair_rank(lo, hi);
    return mask;
}

namespace detail {

void check_enumeration_args(int n, std::uint64_t begin, std::uint64_t end) {
    const std::uint64_t total = labeled_graph_count(n);  // validates n
    if (begin > total || end > total)
        throw std::invalid_argument("enumerate_graph_range: range beyond 2^(n(n-1)/2)");
}

}  // namespace detail

}  // namespace clawkit
