#include <array>
#include <stdexcept>
#include <variant>
#include <vector>

#include "doctest.h"

#include "clawkit/enumerate.hpp"
#include "clawkit/graph.hpp"
#include "clawkit/structure.hpp"
#include "oracles.hpp"

using namespace clawkit;

namespace {

Graph square_plus_path() {
    // C4 on {0..3} next to the path 4-5-6.
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    return g;
}

}  // namespace

TEST_CASE("claw and co-claw detectors return ordered witnesses") {
    const auto w = find_claw(claw());
    REQUIRE(w.has_value());
    CHECK(w->center == 0);
    CHECK(w->leaves == std::array<int, 3>{1, 2, 3});

    const auto cw = find_co_claw(co_claw());
    REQUIRE(cw.has_value());
    CHECK(cw->center == 0);
    CHECK(cw->leaves == std::array<int, 3>{1, 2, 3});

    CHECK(!find_claw(cycle_graph(8)).has_value());
    CHECK(!find_co_claw(complete_graph(3)).has_value());
    CHECK(!find_claw(empty_graph(4)).has_value());

    const auto d = find_diamond(diamond());
    REQUIRE(d.has_value());
    CHECK(*d == std::array<int, 4>{0, 1, 2, 3});
    CHECK(!find_diamond(cycle_graph(5)).has_value());
}

TEST_CASE("detectors agree with the injection-based search up to six vertices") {
    for (int n = 0; n <= 6; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            CHECK(find_claw(g).has_value() == testkit::brute_has_claw(g));
            CHECK(find_co_claw(g).has_value() == testkit::brute_has_co_claw(g));
            CHECK(find_diamond(g).has_value() == testkit::brute_has_diamond(g));
        });
    }
}

TEST_CASE("forbidden-pair membership is complement-symmetric") {
    for (int n = 0; n <= 6; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            CHECK(in_forb_claw_coclaw(g) == in_forb_claw_coclaw(complement(g)));
        });
    }
    CHECK(in_forb_claw_coclaw(p9()));
    CHECK(in_forb_claw_coclaw(a6()));
    CHECK(in_forb_claw_coclaw(cycle_graph(7)));
    CHECK(!in_forb_claw_coclaw(claw()));
    CHECK(!in_forb_claw_coclaw(co_claw()));
}

TEST_CASE("classification picks the documented case per example") {
    {
        const Certificate cert = classify_theorem1(claw());
        REQUIRE(std::holds_alternative<NotInClass>(cert));
        CHECK(format_certificate(cert) == "NotInClass claw 0 1 2 3\n");
        CHECK(!is_positive(cert));
    }
    {
        const Certificate cert = classify_theorem1(co_claw());
        REQUIRE(std::holds_alternative<NotInClass>(cert));
        CHECK(std::get<NotInClass>(cert).co);
    }
    {
        const Certificate cert = classify_theorem1(a6());
        REQUIRE(std::holds_alternative<IsA6>(cert));
        CHECK(verify_certificate(a6(), cert));
    }
    {
        const Certificate cert = classify_theorem1(complement(a6()));
        REQUIRE(std::holds_alternative<IsCoA6>(cert));
        CHECK(verify_certificate(complement(a6()), cert));
    }
    {
        const Certificate cert = classify_theorem1(p9());
        REQUIRE(std::holds_alternative<P9Induced>(cert));
        const auto& emb = std::get<P9Induced>(cert).embedding;
        std::vector<int> identity(9);
        for (int i = 0; i < 9; ++i) identity[i] = i;
        CHECK(emb == identity);
    }
    {
        // The six-cycle embeds into the rook's graph, so that case wins over
        // the component scan.
        const Certificate cert = classify_theorem1(cycle_graph(6));
        CHECK(std::holds_alternative<P9Induced>(cert));
    }
    {
        // The five-cycle does not embed (no odd hole in the rook's graph).
        const Certificate cert = classify_theorem1(cycle_graph(5));
        REQUIRE(std::holds_alternative<LinearForestOrCycles>(cert));
        CHECK(std::get<LinearForestOrCycles>(cert).shapes ==
              std::vector<ComponentShape>{ComponentShape::cycle(5)});
    }
    {
        const Certificate cert = classify_theorem1(square_plus_path());
        REQUIRE(std::holds_alternative<LinearForestOrCycles>(cert));
        const auto& c = std::get<LinearForestOrCycles>(cert);
        CHECK(c.shapes == std::vector<ComponentShape>{ComponentShape::cycle(4),
                                                      ComponentShape::path(3)});
        CHECK(c.components ==
              std::vector<std::vector<int>>{{0, 1, 2, 3}, {4, 5, 6}});
    }
    {
        const Certificate cert = classify_theorem1(complete_graph(5));
        REQUIRE(std::holds_alternative<ComplementCase>(cert));
        CHECK(verify_certificate(complete_graph(5), cert));
    }
}

TEST_CASE("classification is total and certificates verify up to six vertices") {
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t a6_count = 0, co_a6_count = 0;
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            const Certificate cert = classify_theorem1(g);
            CHECK(is_positive(cert) ==
                  (!testkit::brute_has_claw(g) && !testkit::brute_has_co_claw(g)));
            CHECK(verify_certificate(g, cert));
            if (std::holds_alternative<IsA6>(cert)) ++a6_count;
            if (std::holds_alternative<IsCoA6>(cert)) ++co_a6_count;
        });
        if (n == 6) {
            // 720 labelings over an automorphism group of order 6.
            CHECK(a6_count == 120);
            CHECK(co_a6_count == 120);
        } else {
            CHECK(a6_count == 0);
            CHECK(co_a6_count == 0);
        }
    }
}

TEST_CASE("certificates roundtrip through their text form") {
    for (int n = 0; n <= 5; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            const Certificate cert = classify_theorem1(g);
            const std::string text = format_certificate(cert);
            const Certificate back = parse_certificate(text);
            CHECK(format_certificate(back) == text);
            CHECK(verify_certificate(g, back));
        });
    }
    const Certificate cert = classify_theorem1(complete_graph(6));
    const std::string text = format_certificate(cert);
    CHECK(format_certificate(parse_certificate(text)) == text);
}

TEST_CASE("certificate parsing rejects malformed text") {
    CHECK_THROWS_AS(parse_certificate(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("Banana\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("NotInClass claw 0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("NotInClass paw 0 1 2 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("IsA6\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("IsA6\n0->1 0->2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("P9Induced\n0->0 nonsense\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("LinearForestOrCycles\nPath(2): 0 1 2\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("LinearForestOrCycles\nBlob(2): 0 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("ComplementCase\nNotInClass claw 0 1 2 3\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_certificate("ComplementCase\nComplementCase\nIsA6\n0->0\n"),
                    std::invalid_argument);
}

TEST_CASE("certificate verification rejects corrupted witnesses") {
    // Claw witness pointing at a non-claw.
    CHECK(!verify_certificate(complete_graph(4), NotInClass{false, {0, {1, 2, 3}}}));
    CHECK(verify_certificate(claw(), NotInClass{false, {0, {1, 2, 3}}}));
    CHECK(!verify_certificate(claw(), NotInClass{false, {1, {0, 2, 3}}}));
    CHECK(!verify_certificate(claw(), NotInClass{true, {0, {1, 2, 3}}}));
    CHECK(!verify_certificate(claw(), NotInClass{false, {0, {1, 2, 9}}}));
    CHECK(!verify_certificate(claw(), NotInClass{false, {0, {1, 1, 2}}}));

    // Mapping with a transposition that breaks an edge.
    std::vector<int> identity(9);
    for (int i = 0; i < 9; ++i) identity[i] = i;
    CHECK(verify_certificate(p9(), P9Induced{identity}));
    CHECK(!verify_certificate(cycle_graph(9), P9Induced{identity}));
    std::vector<int> swapped = identity;
    std::swap(swapped[0], swapped[4]);
    CHECK(!verify_certificate(p9(), P9Induced{swapped}));
    CHECK(!verify_certificate(p9(), P9Induced{std::vector<int>(9, 0)}));

    std::vector<int> six(6);
    for (int i = 0; i < 6; ++i) six[i] = i;
    CHECK(verify_certificate(a6(), IsA6{six}));
    CHECK(!verify_certificate(complement(a6()), IsA6{six}));
    CHECK(verify_certificate(complement(a6()), IsCoA6{six}));
    CHECK(!verify_certificate(a6(), IsA6{std::vector<int>{0, 1, 2}}));

    // Component list missing a vertex, or with the wrong shape.
    const Graph g = square_plus_path();
    LinearForestOrCycles good;
    good.components = {{0, 1, 2, 3}, {4, 5, 6}};
    good.shapes = {ComponentShape::cycle(4), ComponentShape::path(3)};
    CHECK(verify_certificate(g, good));

    LinearForestOrCycles missing = good;
    missing.components.pop_back();
    missing.shapes.pop_back();
    CHECK(!verify_certificate(g, missing));

    LinearForestOrCycles wrong_shape = good;
    wrong_shape.shapes[0] = ComponentShape::path(4);
    CHECK(!verify_certificate(g, wrong_shape));

    // A triangle component is rejected outright.
    LinearForestOrCycles tri;
    tri.components = {{0, 1, 2}};
    tri.shapes = {ComponentShape::cycle(3)};
    CHECK(!verify_certificate(triangle(), tri));
}
