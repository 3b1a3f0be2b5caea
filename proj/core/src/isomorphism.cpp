#include "clawkit/isomorphism.hpp"

#include <algorithm>

namespace clawkit {

namespace {

struct EmbedSearch {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> map;        // pattern vertex -> host vertex, -1 unset
    std::vector<bool> used;      // host vertices already taken
    std::vector<int> pat_deg;
    std::vector<int> host_deg;

    EmbedSearch(const Graph& p, const Graph& h)
        : pattern(p), host(h), map(p.order(), -1), used(h.order(), false),
          pat_deg(p.order()), host_deg(h.order()) {
        for (int v = 0; v < p.order(); ++v) pat_deg[v] = p.degree(v);
        for (int v = 0; v < h.order(); ++v) host_deg[v] = h.degree(v);
    }

    bool extend(int u) {
        if (u == pattern.order()) return true;
        for (int v = 0; v < host.order(); ++v) {
            if (used[v]) continue;
            // An induced embedding sends neighbors to neighbors and
            // non-neighbors to non-neighbors, so both degree bounds apply.
            if (host_deg[v] < pat_deg[u]) continue;
            if (host.order() - 1 - host_deg[v] < pattern.order() - 1 - pat_deg[u]) continue;
            bool ok = true;
            for (int i = 0; i < u; ++i) {
                if (pattern.has_edge(u, i) != host.has_edge(v, map[i])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[u] = v;
            used[v] = true;
            if (extend(u + 1)) return true;
            map[u] = -1;
            used[v] = false;
        }
        return false;
    }
};

// Degree, then sorted degrees of neighbors: invariant under isomorphism.
std::vector<std::vector<int>> neighbor_degree_signatures(const Graph& g) {
    std::vector<std::vector<int>> sig(g.order());
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> s{g.degree(v)};
        g.for_each_neighbor(v, [&](int w) { s.push_back(g.degree(w)); });
        std::sort(s.begin() + 1, s.end());
        sig[v] = std::move(s);
    }
    return sig;
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    const std::vector<std::vector<int>>& gsig;
    const std::vector<std::vector<int>>& hsig;
    std::vector<int> map;
    std::vector<bool> used;

    bool extend(int u) {
        if (u == g.order()) return true;
        for (int v = 0; v < h.order(); ++v) {
            if (used[v] || gsig[u] != hsig[v]) continue;
            bool ok = true;
            for (int i = 0; i < u; ++i) {
                if (g.has_edge(u, i) != h.has_edge(v, map[i])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[u] = v;
            used[v] = true;
            if (extend(u + 1)) return true;
            map[u] = -1;
            used[v] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& host) {
    if (pattern.order() > host.order()) return std::nullopt;
    EmbedSearch search(pattern, host);
    if (search.extend(0)) return search.map;
    return std::nullopt;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    auto gsig = neighbor_degree_signatures(g);
    auto hsig = neighbor_degree_signatures(h);
    auto sorted_g = gsig;
    auto sorted_h = hsig;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return std::nullopt;
    IsoSearch search{g, h, gsig, hsig,
                     std::vector<int>(g.order(), -1), std::vector<bool>(h.order(), false)};
    if (search.extend(0)) return search.map;
    return std::nullopt;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

}  // namespace clawkit
