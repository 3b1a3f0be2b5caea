#include "clawkit/decompose.hpp"

#include <sstream>
#include <stdexcept>

#include "clawkit/edge_graph.hpp"
#include "clawkit/graph_io.hpp"
#include "clawkit/homogeneous.hpp"
#include "clawkit/isomorphism.hpp"
#include "clawkit/structure.hpp"

namespace clawkit {

bool property2(const Graph& u) {
    return two_coloring(edge_graph(u).base).has_value() &&
           two_coloring(edge_graph(complement(u)).base).has_value();
}

namespace {

// Shapes when every component is a path or an even cycle, else nullopt.
std::optional<std::vector<ComponentShape>> paths_and_even_cycles(const Graph& g) {
    std::vector<ComponentShape> shapes;
    for (const auto& comp : connected_components(g).parts) {
        const ComponentShape shape = classify_component(g, comp);
        if (shape.kind == ComponentShape::Kind::other) return std::nullopt;
        if (shape.kind == ComponentShape::Kind::cycle && shape.length % 2 != 0)
            return std::nullopt;
        shapes.push_back(shape);
    }
    return shapes;
}

// Necessary conditions for an induced embedding into the rook's graph; it is
// 4-regular with 18 edges and has no induced claw, co-claw, or diamond.
bool p9_embedding_plausible(const Graph& g) {
    const int n = g.order();
    if (n > 9 || g.edge_count() > 18) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 4) return false;
    return !find_claw(g) && !find_co_claw(g) && !find_diamond(g);
}

}  // namespace

Property3 property3(const Graph& u) {
    Property3 out;
    if (auto shapes = paths_and_even_cycles(u)) {
        out.tag = Property3::Case::components;
        out.shapes = std::move(*shapes);
        return out;
    }
    if (auto shapes = paths_and_even_cycles(complement(u))) {
        out.tag = Property3::Case::complement_components;
        out.shapes = std::move(*shapes);
        return out;
    }
    if (p9_embedding_plausible(u)) {
        if (auto emb = find_induced_embedding(u, p9())) {
            out.tag = Property3::Case::p9_induced;
            out.p9_embedding = std::move(*emb);
            return out;
        }
    }
    return out;
}

namespace {

void check_summand_order(int n, bool even_cycle) {
    if (n < 1) throw std::invalid_argument("summand order must be positive");
    if (even_cycle && (n < 4 || n % 2 != 0))
        throw std::invalid_argument("cycle summand requires even order >= 4");
}

// All pairs within the even-index class plus all pairs within the odd-index
// class.
Graph parity_cliques(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; j += 2) g.add_edge(i, j);
    return g;
}

}  // namespace

Graph path_summand_a(int n) {
    check_summand_order(n, false);
    Graph g = parity_cliques(n);
    for (int i = 0; i + 1 < n; i += 2) g.add_edge(i, i + 1);
    return g;
}

Graph path_summand_b(int n) {
    check_summand_order(n, false);
    Graph g = parity_cliques(n);
    for (int i = 1; i + 1 < n; i += 2) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_summand_b(int n) {
    check_summand_order(n, true);
    Graph g = path_summand_b(n);
    g.add_edge(0, n - 1);
    return g;
}

namespace {

// The component-by-component construction for a graph whose components are
// all paths or even cycles. Returns (g, gp) with g + gp = u.
std::pair<Graph, Graph> explicit_pair(const Graph& u) {
    const int n = u.order();
    Graph g(n), gp(n);
    std::vector<int> comp_id(n, -1), parity(n, 0);
    const ComponentPartition parts = connected_components(u);
    for (std::size_t c = 0; c < parts.parts.size(); ++c) {
        const std::vector<int> walk = component_walk(u, parts.parts[c]);
        const int k = static_cast<int>(walk.size());
        const bool is_cycle =
            classify_component(u, parts.parts[c]).kind == ComponentShape::Kind::cycle;
        const Graph a = path_summand_a(k);
        const Graph b = is_cycle ? cycle_summand_b(k) : path_summand_b(k);
        for (int i = 0; i < k; ++i) {
            comp_id[walk[i]] = static_cast<int>(c);
            parity[walk[i]] = i % 2;
            for (int j = i + 1; j < k; ++j) {
                if (a.has_edge(i, j)) g.add_edge(walk[i], walk[j]);
                if (b.has_edge(i, j)) gp.add_edge(walk[i], walk[j]);
            }
        }
    }
    // Cross-component pairs with equal parity classes are edges of both
    // graphs, so they cancel in the boolean sum.
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (comp_id[x] != comp_id[y] && parity[x] == parity[y]) {
                g.add_edge(x, y);
                gp.add_edge(x, y);
            }
    return {std::move(g), std::move(gp)};
}

}  // namespace

std::optional<Decomposition> decompose_explicit(const Graph& u) {
    if (paths_and_even_cycles(u)) {
        auto [g, gp] = explicit_pair(u);
        return Decomposition{std::move(g), std::move(gp), u};
    }
    if (paths_and_even_cycles(complement(u))) {
        auto [h, hp] = explicit_pair(complement(u));
        return Decomposition{complement(h), std::move(hp), u};
    }
    return std::nullopt;
}

std::optional<Decomposition> decompose_generic(const Graph& u) {
    const LabeledGraph su = edge_graph(u);
    const LabeledGraph sc = edge_graph(complement(u));
    const auto color_u = two_coloring(su.base);
    const auto color_c = two_coloring(sc.base);
    if (!color_u || !color_c) return std::nullopt;
    const int n = u.order();
    Graph g(n), gp(n);
    for (std::size_t i = 0; i < su.labels.size(); ++i) {
        const VertexPair e = su.labels[i];
        ((*color_u)[i] == 0 ? g : gp).add_edge(e.lo, e.hi);
    }
    for (std::size_t i = 0; i < sc.labels.size(); ++i) {
        if ((*color_c)[i] != 0) continue;
        const VertexPair e = sc.labels[i];
        g.add_edge(e.lo, e.hi);
        gp.add_edge(e.lo, e.hi);
    }
    return Decomposition{std::move(g), std::move(gp), u};
}

std::optional<Decomposition> decompose(const Graph& u) {
    switch (property3(u).tag) {
        case Property3::Case::components:
        case Property3::Case::complement_components:
            return decompose_explicit(u);
        case Property3::Case::p9_induced:
            return decompose_generic(u);
        case Property3::Case::none:
            return std::nullopt;
    }
    return std::nullopt;
}

bool verify_decomposition(const Decomposition& d) {
    if (d.g.order() != d.u.order() || d.gp.order() != d.u.order()) return false;
    return boolean_sum(d.g, d.gp) == d.u && same_3_homogeneous(d.g, d.gp);
}

std::string format_decomposition(const Decomposition& d) {
    std::ostringstream out;
    out << graph6_encode(d.g) << '\n'
        << graph6_encode(d.gp) << '\n'
        << graph6_encode(d.u) << '\n'
        << (verify_decomposition(d) ? "ok" : "invalid") << '\n';
    return out.str();
}

}  // namespace clawkit
