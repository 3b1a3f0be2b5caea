#include "clawkit/edge_graph.hpp"

#include <sstream>
#include <stdexcept>

#include "clawkit/graph_io.hpp"
#include "clawkit/structure.hpp"

namespace clawkit {

LabeledGraph edge_graph(const Graph& u) {
    const int n = u.order();
    if (n > 64) throw std::invalid_argument("edge_graph: base graph order exceeds 64");
    LabeledGraph out;
    for (int lo = 0; lo < n; ++lo)
        for (int hi = lo + 1; hi < n; ++hi)
            if (u.has_edge(lo, hi)) out.labels.push_back(VertexPair(lo, hi));
    const int m = static_cast<int>(out.labels.size());
    out.base = Graph(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const VertexPair a = out.labels[i];
            const VertexPair b = out.labels[j];
            // Distinct edges share at most one endpoint; identify it and the
            // two outer endpoints.
            int shared = -1, y = -1, z = -1;
            if (a.lo == b.lo) {
                shared = a.lo, y = a.hi, z = b.hi;
            } else if (a.lo == b.hi) {
                shared = a.lo, y = a.hi, z = b.lo;
            } else if (a.hi == b.lo) {
                shared = a.hi, y = a.lo, z = b.hi;
            } else if (a.hi == b.hi) {
                shared = a.hi, y = a.lo, z = b.lo;
            }
            if (shared != -1 && !u.has_edge(y, z)) out.base.add_edge(i, j);
        }
    }
    return out;
}

bool star_equivalence_check(const Graph& u) {
    const bool claw_free = !find_claw(u).has_value();
    const bool s_triangle_free = !contains_triangle(edge_graph(u).base);
    return claw_free == s_triangle_free;
}

std::string format_labeled_graph(const LabeledGraph& lg) {
    std::ostringstream out;
    out << graph6_encode(lg.base) << '\n';
    for (std::size_t i = 0; i < lg.labels.size(); ++i)
        out << i << ":(" << lg.labels[i].lo << ',' << lg.labels[i].hi << ")\n";
    return out.str();
}

std::string to_dot(const LabeledGraph& lg) {
    std::ostringstream out;
    out << "graph S {\n";
    for (std::size_t i = 0; i < lg.labels.size(); ++i)
        out << "  " << i << " [label=\"(" << lg.labels[i].lo << ',' << lg.labels[i].hi
            << ")\"];\n";
    const int m = lg.base.order();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (lg.base.has_edge(i, j)) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace clawkit
