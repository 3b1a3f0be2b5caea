#include "clawkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace clawkit {

Graph::Graph(int n) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("graph order out of range 0..2048");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (std::uint64_t w : bits_) twice += std::popcount(w);
    return twice / 2;
}

void Graph::set_edge(int u, int v, bool present) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("vertex out of range");
    const std::uint64_t ubit = std::uint64_t{1} << (u & 63);
    const std::uint64_t vbit = std::uint64_t{1} << (v & 63);
    std::uint64_t& ru = bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)];
    std::uint64_t& rv = bits_[static_cast<std::size_t>(v) * words_ + (static_cast<unsigned>(u) >> 6)];
    if (present) {
        ru |= vbit;
        rv |= ubit;
    } else {
        ru &= ~vbit;
        rv &= ~ubit;
    }
}

void Graph::flip_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] ^=
        std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (static_cast<unsigned>(u) >> 6)] ^=
        std::uint64_t{1} << (u & 63);
}

void Graph::clear_edges() {
    std::fill(bits_.begin(), bits_.end(), 0);
}

int Graph::degree(int v) const {
    const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(v) * words_;
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

VertexPair::VertexPair(int a, int b) : lo(std::min(a, b)), hi(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("vertex pair requires distinct endpoints");
}

VertexPair pair_unrank(std::int64_t rank) {
    // hi is the largest h with h*(h-1)/2 <= rank
    int hi = 1;
    while (static_cast<std::int64_t>(hi + 1) * hi / 2 <= rank) ++hi;
    return VertexPair(static_cast<int>(rank - static_cast<std::int64_t>(hi) * (hi - 1) / 2), hi);
}

std::string to_string(const ComponentShape& shape) {
    switch (shape.kind) {
        case ComponentShape::Kind::path: return "Path(" + std::to_string(shape.length) + ")";
        case ComponentShape::Kind::cycle: return "Cycle(" + std::to_string(shape.length) + ")";
        case ComponentShape::Kind::other: return "Other";
    }
    return "Other";
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph boolean_sum(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        throw std::invalid_argument("boolean_sum requires graphs of the same order");
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) != h.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

InducedSubgraph induced(const Graph& g, std::span<const int> vertices) {
    std::vector<int> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.order())
            throw std::invalid_argument("induced: vertex out of range");
        if (i > 0 && vs[i] == vs[i - 1])
            throw std::invalid_argument("induced: repeated vertex");
    }
    Graph sub(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), std::move(vs)};
}

ComponentPartition connected_components(const Graph& g) {
    const int n = g.order();
    ComponentPartition out;
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<int> part;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            part.push_back(v);
            g.for_each_neighbor(v, [&](int w) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            });
        }
        std::sort(part.begin(), part.end());
        out.parts.push_back(std::move(part));
    }
    return out;
}

namespace {

// True when `vs` (sorted, distinct, in range) is exactly the component of
// its first vertex.
bool is_component_of(const Graph& g, std::span<const int> vs) {
    if (vs.empty()) return false;
    const int n = g.order();
    std::vector<bool> in_set(n, false);
    for (int v : vs) {
        if (v < 0 || v >= n || in_set[v]) return false;
        in_set[v] = true;
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{vs[0]};
    seen[vs[0]] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!in_set[v]) return false;  // edge leaves the claimed component
        ++reached;
        g.for_each_neighbor(v, [&](int w) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        });
    }
    return reached == vs.size();
}

}  // namespace

ComponentShape classify_component(const Graph& g, std::span<const int> component) {
    if (!is_component_of(g, component))
        throw std::invalid_argument("classify_component: not a connected component");
    const int k = static_cast<int>(component.size());
    if (k == 1) return ComponentShape::path(1);
    int deg1 = 0, deg2 = 0;
    for (int v : component) {
        const int d = g.degree(v);  // equals the in-component degree
        if (d == 1)
            ++deg1;
        else if (d == 2)
            ++deg2;
        else
            return ComponentShape::other();
    }
    // The set is connected, so the degree multiset decides the shape.
    if (deg1 == 2 && deg2 == k - 2) return ComponentShape::path(k);
    if (deg1 == 0 && deg2 == k && k >= 3) return ComponentShape::cycle(k);
    return ComponentShape::other();
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            bool ok = true;
            g.for_each_neighbor(v, [&](int w) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    ok = false;
                }
            });
            if (!ok) return std::nullopt;
        }
    }
    return color;
}

std::vector<int> component_walk(const Graph& g, std::span<const int> component) {
    const ComponentShape shape = classify_component(g, component);
    if (shape.kind == ComponentShape::Kind::other)
        throw std::invalid_argument("component_walk: component is neither a path nor a cycle");
    if (component.size() == 1) return {component[0]};
    int start = component[0];  // component is sorted ascending
    if (shape.kind == ComponentShape::Kind::path)
        for (int v : component)
            if (g.degree(v) == 1) {
                start = v;
                break;
            }
    std::vector<int> walk{start};
    std::vector<bool> seen(g.order(), false);
    seen[start] = true;
    for (int cur = start;;) {
        int next = -1;
        g.for_each_neighbor(cur, [&](int w) {
            if (!seen[w] && (next == -1 || w < next)) next = w;
        });
        if (next == -1) break;
        seen[next] = true;
        walk.push_back(next);
        cur = next;
    }
    return walk;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    const int n = g.order();
    const int words = g.words_per_row();
    for (int u = 0; u < n; ++u) {
        auto ru = g.row(u);
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            auto rv = g.row(v);
            for (int w = 0; w < words; ++w) {
                std::uint64_t common = ru[w] & rv[w];
                if (w == v >> 6) {  // only look above v to avoid repeats
                    // keep bits > v within this word and all bits in later words
                    common &= ~((std::uint64_t{2} << (v & 63)) - 1);
                } else if (w < v >> 6) {
                    common = 0;
                }
                if (common)
                    return std::array<int, 3>{u, v, (w << 6) | std::countr_zero(common)};
            }
        }
    }
    return std::nullopt;
}

bool contains_triangle(const Graph& g) {
    return find_triangle(g).has_value();
}

Graph empty_graph(int n) {
    return Graph(n);
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph claw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    return g;
}

Graph co_claw() {
    return complement(claw());
}

Graph diamond() {
    Graph g = complete_graph(4);
    g.remove_edge(2, 3);
    return g;
}

Graph triangle() {
    return complete_graph(3);
}

Graph a6() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 0);
    g.add_edge(3, 1);
    g.add_edge(4, 1);
    g.add_edge(4, 2);
    g.add_edge(5, 2);
    g.add_edge(5, 0);
    return g;
}

Graph p9() {
    Graph g(9);
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            if (a / 3 == b / 3 || a % 3 == b % 3) g.add_edge(a, b);
    return g;
}

}  // namespace clawkit
