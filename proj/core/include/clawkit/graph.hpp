#ifndef CLAWKIT_GRAPH_HPP
#define CLAWKIT_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clawkit {

/// Simple undirected graph on labeled vertices 0..n-1, no loops.
/// Adjacency is stored as bit-packed symmetric rows; all operations on
/// graphs in this library are pure functions over const references, so
/// values can be shared freely between threads once built.
class Graph {
public:
    static constexpr int max_vertices = 2048;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::int64_t edge_count() const;

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)]
                >> (v & 63)) & 1u;
    }

    void set_edge(int u, int v, bool present);
    void add_edge(int u, int v) { set_edge(u, v, true); }
    void remove_edge(int u, int v) { set_edge(u, v, false); }
    void flip_edge(int u, int v);
    void clear_edges();

    int degree(int v) const;

    /// Bit row of v, words_per_row() words, bit u set iff u~v.
    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    int words_per_row() const { return words_; }

    template <typename F>
    void for_each_neighbor(int v, F&& f) const {
        const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word) {
                int bit = std::countr_zero(word);
                f((w << 6) | bit);
                word &= word - 1;
            }
        }
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Canonical unordered pair of distinct vertices, lo < hi.
struct VertexPair {
    int lo = 0;
    int hi = 0;

    VertexPair() = default;
    VertexPair(int a, int b);

    auto operator<=>(const VertexPair&) const = default;
};

/// Colexicographic rank of the pair {lo,hi}: pairs ordered
/// (0,1),(0,2),(1,2),(0,3),...  This is also the graph6 bit order and the
/// k=2 case of the subset indexing used by the incidence module.
constexpr std::int64_t pair_rank(int lo, int hi) {
    return static_cast<std::int64_t>(hi) * (hi - 1) / 2 + lo;
}
VertexPair pair_unrank(std::int64_t rank);

/// Maximal connected components, each sorted ascending, ordered by their
/// smallest vertex; together they partition the vertex set.
struct ComponentPartition {
    std::vector<std::vector<int>> parts;
};

struct ComponentShape {
    enum class Kind { path, cycle, other };
    Kind kind = Kind::other;
    int length = 0;  // vertex count for path/cycle

    static ComponentShape path(int k) { return {Kind::path, k}; }
    static ComponentShape cycle(int k) { return {Kind::cycle, k}; }
    static ComponentShape other() { return {Kind::other, 0}; }

    bool operator==(const ComponentShape&) const = default;
};
std::string to_string(const ComponentShape& shape);

/// Result of induced(): the subgraph together with the map back to the
/// original labels (vertices[i] is the original label of new vertex i).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;
};

Graph complement(const Graph& g);

/// Edge set of the result is the symmetric difference E(g) xor E(h).
/// Throws std::invalid_argument when the orders differ.
Graph boolean_sum(const Graph& g, const Graph& h);

/// Induced subgraph on the given distinct vertices, relabeled 0..|S|-1
/// preserving ascending vertex order. Throws on out-of-range or repeated
/// vertices.
InducedSubgraph induced(const Graph& g, std::span<const int> vertices);

ComponentPartition connected_components(const Graph& g);

/// Classifies a connected component: Path(k) for a simple path on k >= 1
/// vertices (an isolated vertex is Path(1)), Cycle(k) for a simple cycle on
/// k >= 3, Other otherwise. Throws std::invalid_argument when `component`
/// is not a connected component of g.
ComponentShape classify_component(const Graph& g, std::span<const int> component);

/// A proper 2-coloring when one exists. Each component is colored by BFS
/// with its smallest vertex colored 0, which pins the output.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// Vertices of a path or cycle component in traversal order: a path starts
/// at its smaller endpoint, a cycle at its smallest vertex stepping to the
/// smaller of its two neighbors first. Throws std::invalid_argument when
/// the component is neither.
std::vector<int> component_walk(const Graph& g, std::span<const int> component);

std::optional<std::array<int, 3>> find_triangle(const Graph& g);
bool contains_triangle(const Graph& g);

// Named graphs.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph claw();              // center 0 joined to independent {1,2,3}
Graph co_claw();           // triangle {1,2,3} plus isolated 0
Graph diamond();           // K4 minus the edge {2,3}
Graph triangle();
Graph a6();                // inner triangle {0,1,2}; 3~{0,1}, 4~{1,2}, 5~{2,0}
Graph p9();                // 3x3 rook's graph, cell (i,j) at vertex 3i+j

}  // namespace clawkit

#endif  // CLAWKIT_GRAPH_HPP
