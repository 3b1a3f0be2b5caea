#ifndef CLAWKIT_GRAPH_IO_HPP
#define CLAWKIT_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "clawkit/graph.hpp"

namespace clawkit {

/// graph6 parse failure; `kind` distinguishes the malformed-input cases.
class Graph6Error : public std::runtime_error {
public:
    enum class Kind {
        bad_header,     // missing/short/non-canonical length header
        invalid_byte,   // byte outside the graph6 alphabet 63..126
        bad_length,     // body length does not match the header
        trailing_bits,  // nonzero padding bits after the adjacency data
        too_large,      // order beyond Graph::max_vertices
    };

    Graph6Error(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Canonical graph6 encoding: length header, then the upper triangle of the
/// adjacency matrix column by column in 6-bit chunks offset by 63.
std::string graph6_encode(const Graph& g);

/// Strict inverse of graph6_encode: accepts exactly the canonical strings,
/// so encode(decode(s)) == s whenever decode succeeds.
Graph graph6_decode(std::string_view text);

/// Plain text edge list: first line "n m", then m lines "u v" (0-based).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);  // throws std::invalid_argument

/// Undirected DOT output, default styling.
std::string to_dot(const Graph& g);

}  // namespace clawkit

#endif  // CLAWKIT_GRAPH_IO_HPP
