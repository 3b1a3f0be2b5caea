#include "clawkit/homogeneous.hpp"

#include <sstream>
#include <stdexcept>

#include "clawkit/edge_graph.hpp"

namespace clawkit {

namespace {

bool triple_homogeneous(const Graph& g, int x, int y, int z) {
    const int edges = g.has_edge(x, y) + g.has_edge(x, z) + g.has_edge(y, z);
    return edges == 0 || edges == 3;
}

void require_same_order(const Graph& g, const Graph& h, const char* who) {
    if (g.order() != h.order())
        throw std::invalid_argument(std::string(who) + ": graph orders differ");
}

}  // namespace

TripleSet homogeneous_triples(const Graph& g) {
    TripleSet out;
    out.n = g.order();
    for (int x = 0; x < out.n; ++x)
        for (int y = x + 1; y < out.n; ++y)
            for (int z = y + 1; z < out.n; ++z)
                if (triple_homogeneous(g, x, y, z)) out.members.push_back({x, y, z});
    return out;
}

bool same_3_homogeneous(const Graph& g, const Graph& h) {
    require_same_order(g, h, "same_3_homogeneous");
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                if (triple_homogeneous(g, x, y, z) != triple_homogeneous(h, x, y, z))
                    return false;
    return true;
}

bool lemma3_condition_b(const Graph& g, const Graph& u) {
    require_same_order(g, u, "lemma3_condition_b");
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                // Roles: x is the vertex on both premise edges.
                const std::array<std::array<int, 3>, 3> roles{{{a, b, c}, {b, a, c}, {c, a, b}}};
                for (const auto& [x, y, z] : roles) {
                    if (u.has_edge(x, y) == u.has_edge(x, z) &&
                        u.has_edge(x, y) != u.has_edge(y, z) &&
                        g.has_edge(x, y) == g.has_edge(x, z))
                        return false;
                }
            }
        }
    }
    return true;
}

bool lemma3_condition_c(const Graph& g, const Graph& u) {
    require_same_order(g, u, "lemma3_condition_c");
    // Both split parts are independent exactly when every edge-graph edge
    // joins a g-edge to a g-non-edge.
    for (const Graph& base : {u, complement(u)}) {
        const LabeledGraph s = edge_graph(base);
        const int m = s.base.order();
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (s.base.has_edge(i, j)) {
                    const VertexPair p = s.labels[i];
                    const VertexPair q = s.labels[j];
                    if (g.has_edge(p.lo, p.hi) == g.has_edge(q.lo, q.hi)) return false;
                }
    }
    return true;
}

std::string format_triples(const TripleSet& triples) {
    std::ostringstream out;
    for (const auto& t : triples.members) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

}  // namespace clawkit
