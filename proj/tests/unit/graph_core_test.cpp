#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "clawkit/enumerate.hpp"
#include "clawkit/graph.hpp"
#include "oracles.hpp"

using namespace clawkit;

TEST_CASE("vertex pair rank and unrank are inverse") {
    std::int64_t expected = 0;
    for (int hi = 1; hi < 40; ++hi) {
        for (int lo = 0; lo < hi; ++lo) {
            CHECK(pair_rank(lo, hi) == expected);
            const VertexPair p = pair_unrank(expected);
            CHECK(p.lo == lo);
            CHECK(p.hi == hi);
            ++expected;
        }
    }
}

TEST_CASE("vertex pairs normalize their endpoints") {
    const VertexPair p(7, 2);
    CHECK(p.lo == 2);
    CHECK(p.hi == 7);
    CHECK_THROWS_AS(VertexPair(3, 3), std::invalid_argument);
}

TEST_CASE("edge operations stay symmetric across word boundaries") {
    std::mt19937_64 rng(20240801);
    Graph g(130);
    std::vector<std::vector<bool>> mirror(130, std::vector<bool>(130, false));
    std::uniform_int_distribution<int> pick(0, 129);
    for (int step = 0; step < 4000; ++step) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        switch (step % 3) {
            case 0:
                g.add_edge(u, v);
                mirror[u][v] = mirror[v][u] = true;
                break;
            case 1:
                g.remove_edge(u, v);
                mirror[u][v] = mirror[v][u] = false;
                break;
            default:
                g.flip_edge(u, v);
                mirror[u][v] = mirror[v][u] = !mirror[u][v];
                break;
        }
    }
    std::int64_t edges = 0;
    for (int u = 0; u < 130; ++u) {
        int deg = 0;
        for (int v = 0; v < 130; ++v) {
            CHECK(g.has_edge(u, v) == mirror[u][v]);
            if (mirror[u][v]) ++deg;
        }
        CHECK(g.degree(u) == deg);
        edges += deg;
    }
    CHECK(g.edge_count() == edges / 2);

    std::vector<int> seen;
    g.for_each_neighbor(70, [&](int w) { seen.push_back(w); });
    std::vector<int> expected;
    for (int v = 0; v < 130; ++v)
        if (mirror[70][v]) expected.push_back(v);
    CHECK(seen == expected);
}

TEST_CASE("edge operations validate their arguments") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(Graph::max_vertices + 1), std::invalid_argument);
}

TEST_CASE("complement is an involution with inverted adjacency") {
    for (int n = 0; n <= 5; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            const Graph co = complement(g);
            CHECK(complement(co) == g);
            CHECK(co.edge_count() + g.edge_count() == n * (n - 1) / 2);
        });
    }
    std::mt19937_64 rng(7);
    for (int n : {10, 33, 64}) {
        const Graph g = testkit::random_graph(rng, n);
        const Graph co = complement(g);
        CHECK(complement(co) == g);
        for (int u = 0; u < n; ++u) {
            CHECK(!co.has_edge(u, u));
            for (int v = u + 1; v < n; ++v) CHECK(co.has_edge(u, v) == !g.has_edge(u, v));
        }
    }
}

TEST_CASE("boolean sum is the symmetric difference of edge sets") {
    for (int n = 0; n <= 4; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            const Graph gc = g;
            enumerate_graphs(n, [&](const Graph& h, std::uint64_t) {
                const Graph s = boolean_sum(gc, h);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        CHECK(s.has_edge(u, v) == (gc.has_edge(u, v) != h.has_edge(u, v)));
                CHECK(s == boolean_sum(h, gc));
            });
            CHECK(boolean_sum(gc, empty_graph(n)) == gc);
            CHECK(boolean_sum(gc, gc) == empty_graph(n));
        });
    }
    std::mt19937_64 rng(11);
    const Graph a = testkit::random_graph(rng, 20);
    const Graph b = testkit::random_graph(rng, 20);
    const Graph c = testkit::random_graph(rng, 20);
    CHECK(boolean_sum(boolean_sum(a, b), c) == boolean_sum(a, boolean_sum(b, c)));
    CHECK_THROWS_AS(boolean_sum(Graph(3), Graph(4)), std::invalid_argument);
}

TEST_CASE("induced subgraphs relabel ascending") {
    const std::vector<int> row{0, 1, 2};
    const InducedSubgraph rook_row = induced(p9(), row);
    CHECK(rook_row.graph == complete_graph(3));
    CHECK(rook_row.vertices == row);

    const std::vector<int> unordered{4, 0, 2};
    const InducedSubgraph sub = induced(path_graph(5), unordered);
    CHECK(sub.vertices == std::vector<int>{0, 2, 4});
    CHECK(sub.graph == empty_graph(3));

    CHECK_THROWS_AS(induced(path_graph(3), std::vector<int>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(induced(path_graph(3), std::vector<int>{0, 3}), std::invalid_argument);
}

namespace {

Graph path_plus_square() {
    // Path 0-1-2 next to the 4-cycle 3-4-5-6.
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 3);
    return g;
}

}  // namespace

TEST_CASE("connected components partition the vertex set in order") {
    const Graph g = path_plus_square();
    const ComponentPartition parts = connected_components(g);
    REQUIRE(parts.parts.size() == 2);
    CHECK(parts.parts[0] == std::vector<int>{0, 1, 2});
    CHECK(parts.parts[1] == std::vector<int>{3, 4, 5, 6});

    CHECK(connected_components(empty_graph(0)).parts.empty());
    CHECK(connected_components(empty_graph(3)).parts.size() == 3);
    CHECK(connected_components(complete_graph(5)).parts.size() == 1);
}

TEST_CASE("component classification recognizes paths and cycles") {
    const Graph g = path_plus_square();
    const ComponentPartition parts = connected_components(g);
    CHECK(classify_component(g, parts.parts[0]) == ComponentShape::path(3));
    CHECK(classify_component(g, parts.parts[1]) == ComponentShape::cycle(4));

    const Graph one = empty_graph(1);
    CHECK(classify_component(one, std::vector<int>{0}) == ComponentShape::path(1));

    const Graph k4 = complete_graph(4);
    CHECK(classify_component(k4, std::vector<int>{0, 1, 2, 3}) == ComponentShape::other());

    const Graph cl = claw();
    CHECK(classify_component(cl, std::vector<int>{0, 1, 2, 3}) == ComponentShape::other());

    CHECK_THROWS_AS(classify_component(path_graph(3), std::vector<int>{0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_component(path_graph(3), std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("component shape text forms") {
    CHECK(to_string(ComponentShape::path(3)) == "Path(3)");
    CHECK(to_string(ComponentShape::cycle(12)) == "Cycle(12)");
    CHECK(to_string(ComponentShape::other()) == "Other");
}

TEST_CASE("two colorings are pinned by the smallest vertex per component") {
    CHECK(two_coloring(path_graph(4)) == std::vector<int>{0, 1, 0, 1});
    CHECK(two_coloring(cycle_graph(6)) == std::vector<int>{0, 1, 0, 1, 0, 1});
    CHECK(two_coloring(empty_graph(3)) == std::vector<int>{0, 0, 0});
    CHECK(!two_coloring(cycle_graph(5)).has_value());
    CHECK(!two_coloring(complete_graph(3)).has_value());
    const Graph g = path_plus_square();
    CHECK(two_coloring(g) == std::vector<int>{0, 1, 0, 0, 1, 0, 1});
}

TEST_CASE("two colorings agree with the exhaustive search") {
    for (int n = 0; n <= 6; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            const auto coloring = two_coloring(g);
            CHECK(coloring.has_value() == testkit::brute_two_colorable(g));
            if (coloring) {
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (g.has_edge(u, v)) CHECK((*coloring)[u] != (*coloring)[v]);
            }
        });
    }
}

TEST_CASE("component walks traverse paths from the smaller endpoint") {
    CHECK(component_walk(path_graph(4), std::vector<int>{0, 1, 2, 3}) ==
          std::vector<int>{0, 1, 2, 3});

    // Path 2-0-3 with isolated vertex 1.
    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    CHECK(component_walk(g, std::vector<int>{0, 2, 3}) == std::vector<int>{2, 0, 3});
    CHECK(component_walk(g, std::vector<int>{1}) == std::vector<int>{1});

    CHECK(component_walk(cycle_graph(4), std::vector<int>{0, 1, 2, 3}) ==
          std::vector<int>{0, 1, 2, 3});

    // 4-cycle 0-2-1-3-0: from 0 the smaller neighbor 2 comes first.
    Graph c(4);
    c.add_edge(0, 2);
    c.add_edge(2, 1);
    c.add_edge(1, 3);
    c.add_edge(3, 0);
    CHECK(component_walk(c, std::vector<int>{0, 1, 2, 3}) == std::vector<int>{0, 2, 1, 3});

    CHECK_THROWS_AS(component_walk(claw(), std::vector<int>{0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("walks visit every component vertex exactly once") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            for (const auto& comp : connected_components(g).parts) {
                const ComponentShape shape = classify_component(g, comp);
                if (shape.kind == ComponentShape::Kind::other) continue;
                const std::vector<int> walk = component_walk(g, comp);
                std::vector<int> sorted = walk;
                std::sort(sorted.begin(), sorted.end());
                CHECK(sorted == comp);
                for (std::size_t i = 0; i + 1 < walk.size(); ++i)
                    CHECK(g.has_edge(walk[i], walk[i + 1]));
                if (shape.kind == ComponentShape::Kind::cycle)
                    CHECK(g.has_edge(walk.back(), walk.front()));
            }
        });
    }
}

TEST_CASE("triangle search scans pairs in order") {
    CHECK(find_triangle(complete_graph(3)) == std::array<int, 3>{0, 1, 2});
    CHECK(find_triangle(diamond()) == std::array<int, 3>{0, 1, 2});
    CHECK(!find_triangle(cycle_graph(4)).has_value());
    CHECK(!find_triangle(path_graph(6)).has_value());
    CHECK(!find_triangle(claw()).has_value());
    CHECK(contains_triangle(co_claw()));

    for (int n = 0; n <= 5; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            bool brute = false;
            for (int a = 0; a < n && !brute; ++a)
                for (int b = a + 1; b < n && !brute; ++b)
                    for (int c = b + 1; c < n && !brute; ++c)
                        brute = g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
            CHECK(contains_triangle(g) == brute);
            if (auto t = find_triangle(g)) {
                CHECK(g.has_edge((*t)[0], (*t)[1]));
                CHECK(g.has_edge((*t)[0], (*t)[2]));
                CHECK(g.has_edge((*t)[1], (*t)[2]));
            }
        });
    }
}

TEST_CASE("named graphs have the expected shapes") {
    CHECK(empty_graph(4).edge_count() == 0);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

    CHECK(claw().order() == 4);
    CHECK(claw().edge_count() == 3);
    CHECK(claw().degree(0) == 3);
    CHECK(co_claw() == complement(claw()));
    CHECK(diamond().edge_count() == 5);
    CHECK(!diamond().has_edge(2, 3));
    CHECK(triangle() == complete_graph(3));

    const Graph sun = a6();
    CHECK(sun.order() == 6);
    CHECK(sun.edge_count() == 9);
    int deg4 = 0, deg2 = 0;
    for (int v = 0; v < 6; ++v) {
        if (sun.degree(v) == 4) ++deg4;
        if (sun.degree(v) == 2) ++deg2;
    }
    CHECK(deg4 == 3);
    CHECK(deg2 == 3);
    CHECK(contains_triangle(sun));

    const Graph rook = p9();
    CHECK(rook.order() == 9);
    CHECK(rook.edge_count() == 18);
    for (int v = 0; v < 9; ++v) CHECK(rook.degree(v) == 4);
    // Rows and columns of the 3x3 grid are triangles.
    CHECK(rook.has_edge(0, 1));
    CHECK(rook.has_edge(0, 3));
    CHECK(!rook.has_edge(0, 4));
}
