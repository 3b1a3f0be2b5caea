#include "clawkit/graph_io.hpp"

#include <sstream>

namespace clawkit {

namespace {

constexpr int g6_offset = 63;

void append_bits(std::string& out, std::uint32_t& buf, int& nbits, bool bit) {
    buf = (buf << 1) | (bit ? 1u : 0u);
    if (++nbits == 6) {
        out.push_back(static_cast<char>(g6_offset + buf));
        buf = 0;
        nbits = 0;
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(g6_offset + n));
    } else {
        // 4-byte header: '~' then n as three 6-bit digits, big-endian.
        out.push_back(126);
        out.push_back(static_cast<char>(g6_offset + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(g6_offset + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(g6_offset + (n & 63)));
    }
    std::uint32_t buf = 0;
    int nbits = 0;
    for (int hi = 1; hi < n; ++hi)
        for (int lo = 0; lo < hi; ++lo) append_bits(out, buf, nbits, g.has_edge(lo, hi));
    if (nbits > 0) {
        buf <<= (6 - nbits);
        out.push_back(static_cast<char>(g6_offset + buf));
    }
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw Graph6Error(Graph6Error::Kind::bad_header, "graph6: empty input");
    for (char c : text) {
        const unsigned char b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126)
            throw Graph6Error(Graph6Error::Kind::invalid_byte,
                              "graph6: byte outside alphabet 63..126");
    }
    std::size_t pos = 0;
    std::int64_t n = 0;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
            if (text.size() < 8)
                throw Graph6Error(Graph6Error::Kind::bad_header, "graph6: truncated header");
            std::int64_t big = 0;
            for (int i = 2; i < 8; ++i) big = (big << 6) | (text[i] - g6_offset);
            if (big < 258048)
                throw Graph6Error(Graph6Error::Kind::bad_header,
                                  "graph6: non-canonical 8-byte header");
            throw Graph6Error(Graph6Error::Kind::too_large, "graph6: order exceeds 2048");
        }
        if (text.size() < 4)
            throw Graph6Error(Graph6Error::Kind::bad_header, "graph6: truncated header");
        n = (static_cast<std::int64_t>(text[1] - g6_offset) << 12) |
            (static_cast<std::int64_t>(text[2] - g6_offset) << 6) |
            static_cast<std::int64_t>(text[3] - g6_offset);
        if (n <= 62)
            throw Graph6Error(Graph6Error::Kind::bad_header,
                              "graph6: non-canonical long header for small order");
        pos = 4;
    } else {
        n = text[0] - g6_offset;
        pos = 1;
    }
    if (n > Graph::max_vertices)
        throw Graph6Error(Graph6Error::Kind::too_large, "graph6: order exceeds 2048");

    const std::int64_t nbits = n * (n - 1) / 2;
    const std::size_t expect = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos != expect)
        throw Graph6Error(Graph6Error::Kind::bad_length,
                          "graph6: body length does not match header");

    Graph g(static_cast<int>(n));
    std::int64_t bit = 0;
    for (std::size_t i = pos; i < text.size(); ++i) {
        const int chunk = text[i] - g6_offset;
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (chunk >> k) & 1;
            if (bit >= nbits) {
                if (set)
                    throw Graph6Error(Graph6Error::Kind::trailing_bits,
                                      "graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                const VertexPair e = pair_unrank(bit);
                g.add_edge(e.lo, e.hi);
            }
        }
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::int64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0 || n > Graph::max_vertices)
        throw std::invalid_argument("edge list: order out of range 0..2048");
    if (m < 0) throw std::invalid_argument("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range");
        if (u == v) throw std::invalid_argument("edge list: loop edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("edge list: trailing tokens");
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace clawkit
