#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"

#include "clawkit/enumerate.hpp"
#include "clawkit/graph.hpp"
#include "clawkit/graph_io.hpp"
#include "oracles.hpp"

using namespace clawkit;

namespace {

Graph6Error::Kind decode_failure(const std::string& text) {
    try {
        graph6_decode(text);
    } catch (const Graph6Error& e) {
        return e.kind();
    }
    FAIL("expected graph6_decode to throw for: " << text);
    return Graph6Error::Kind::bad_header;
}

}  // namespace

TEST_CASE("graph6 encodes known small graphs") {
    CHECK(graph6_encode(empty_graph(0)) == "?");
    CHECK(graph6_encode(empty_graph(1)) == "@");
    CHECK(graph6_encode(complete_graph(2)) == "A_");
    CHECK(graph6_encode(empty_graph(2)) == "A?");
    CHECK(graph6_encode(triangle()) == "Bw");
    CHECK(graph6_encode(claw()) == "Cs");
    CHECK(graph6_encode(path_graph(4)) == "Ch");
    CHECK(graph6_encode(cycle_graph(4)) == "Cl");
    CHECK(graph6_encode(cycle_graph(5)) == "Dhc");
}

TEST_CASE("graph6 decodes known strings back") {
    CHECK(graph6_decode("?") == empty_graph(0));
    CHECK(graph6_decode("Bw") == triangle());
    CHECK(graph6_decode("Cs") == claw());
    CHECK(graph6_decode("Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 roundtrips every graph up to five vertices") {
    for (int n = 0; n <= 5; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            const std::string text = graph6_encode(g);
            CHECK(graph6_decode(text) == g);
        });
    }
}

TEST_CASE("graph6 roundtrips large and random graphs") {
    std::mt19937_64 rng(99);
    for (int n : {40, 63, 64, 100, 200}) {
        const Graph g = testkit::random_graph(rng, n, 0.3);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    const std::string big = graph6_encode(empty_graph(63));
    CHECK(big.substr(0, 4) == "~??~");
    CHECK(graph6_decode(big) == empty_graph(63));
}

TEST_CASE("graph6 decode accepts exactly the canonical strings on three vertices") {
    // Three adjacency bits leave three padding bits that must stay zero.
    for (int byte = 63; byte <= 126; ++byte) {
        const std::string text{'B', static_cast<char>(byte)};
        if ((byte - 63) % 8 == 0) {
            const Graph g = graph6_decode(text);
            CHECK(graph6_encode(g) == text);
        } else {
            CHECK(decode_failure(text) == Graph6Error::Kind::trailing_bits);
        }
    }
}

TEST_CASE("graph6 decode reports the failure kind") {
    CHECK(decode_failure("") == Graph6Error::Kind::bad_header);
    CHECK(decode_failure("~") == Graph6Error::Kind::bad_header);
    CHECK(decode_failure("~?") == Graph6Error::Kind::bad_header);
    // Long form used for an order the short form covers.
    CHECK(decode_failure("~??B") == Graph6Error::Kind::bad_header);
    // 8-byte form used for an order the 4-byte form covers.
    CHECK(decode_failure("~~??????") == Graph6Error::Kind::bad_header);

    CHECK(decode_failure(std::string("B ")) == Graph6Error::Kind::invalid_byte);
    CHECK(decode_failure(std::string("=w")) == Graph6Error::Kind::invalid_byte);
    CHECK(decode_failure(std::string(1, static_cast<char>(127))) ==
          Graph6Error::Kind::invalid_byte);

    CHECK(decode_failure("B") == Graph6Error::Kind::bad_length);
    CHECK(decode_failure("Bww") == Graph6Error::Kind::bad_length);
    CHECK(decode_failure("A") == Graph6Error::Kind::bad_length);

    CHECK(decode_failure("Bx") == Graph6Error::Kind::trailing_bits);

    CHECK(decode_failure("~`??") == Graph6Error::Kind::too_large);
    CHECK(decode_failure("~~??~???") == Graph6Error::Kind::too_large);
}

TEST_CASE("edge list text form roundtrips") {
    CHECK(to_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n");
    CHECK(to_edge_list(empty_graph(0)) == "0 0\n");

    for (int n = 0; n <= 4; ++n) {
        enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
            CHECK(parse_edge_list(to_edge_list(g)) == g);
        });
    }
    CHECK(parse_edge_list("4 2 2 3 0 1") == parse_edge_list("4 2\n0 1\n2 3\n"));
}

TEST_CASE("edge list parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("-1 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 -1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2 1 0 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2 1 0 5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2 2 0 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("2 1 0 1 7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("9999 0"), std::invalid_argument);
}

TEST_CASE("dot output lists vertices and edges") {
    const std::string dot = to_dot(complete_graph(2));
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(to_dot(empty_graph(0)) == "graph G {\n}\n");
}
