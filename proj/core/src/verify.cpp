#include "clawkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "clawkit/decompose.hpp"
#include "clawkit/edge_graph.hpp"
#include "clawkit/enumerate.hpp"
#include "clawkit/graph_io.hpp"
#include "clawkit/homogeneous.hpp"
#include "clawkit/isomorphism.hpp"
#include "clawkit/structure.hpp"

namespace clawkit {

namespace {

constexpr std::size_t counterexample_cap = 10;

// --- independent oracle routes ---------------------------------------------

// Claw detection by center: x centers a claw iff its neighborhood contains
// three pairwise non-adjacent vertices. A different decision path than the
// classifier's 4-subset scan.
bool has_claw_by_neighborhoods(const Graph& g) {
    const int n = g.order();
    std::vector<int> nbrs;
    for (int x = 0; x < n; ++x) {
        if (g.degree(x) < 3) continue;
        nbrs.clear();
        g.for_each_neighbor(x, [&](int w) { nbrs.push_back(w); });
        const int d = static_cast<int>(nbrs.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nbrs[i], nbrs[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]))
                        return true;
            }
    }
    return false;
}

bool in_class_oracle(const Graph& g) {
    return !has_claw_by_neighborhoods(g) && !has_claw_by_neighborhoods(complement(g));
}

// Line graph (edges adjacent iff sharing an endpoint); only the root oracle
// needs it.
Graph line_graph(const Graph& r) {
    std::vector<VertexPair> edges;
    for (int lo = 0; lo < r.order(); ++lo)
        for (int hi = lo + 1; hi < r.order(); ++hi)
            if (r.has_edge(lo, hi)) edges.push_back(VertexPair(lo, hi));
    const int m = static_cast<int>(edges.size());
    Graph out(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const VertexPair a = edges[i], b = edges[j];
            if (a.lo == b.lo || a.lo == b.hi || a.hi == b.lo || a.hi == b.hi)
                out.add_edge(i, j);
        }
    return out;
}

// Largest adjacency mask over all relabelings; usable as an isomorphism key
// for orders small enough to permute outright.
std::uint64_t brute_canonical_mask(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t best = 0;
    do {
        std::uint64_t mask = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(perm[u], perm[v])) mask |= std::uint64_t{1} << pair_rank(u, v);
        best = std::max(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Decides whether a connected graph h is the line graph of some connected
// triangle-free graph, by enumerating every candidate root: h on m vertices
// forces |E(root)| = m and at most m+1 root vertices.
bool component_has_triangle_free_root(const Graph& h) {
    const int m = h.order();
    for (int r = 1; r <= m + 1; ++r) {
        const int slots = r * (r - 1) / 2;
        if (slots < m) continue;
        std::vector<int> pick(m);
        for (int i = 0; i < m; ++i) pick[i] = i;
        for (;;) {
            Graph root(r);
            for (int i : pick) {
                const VertexPair e = pair_unrank(i);
                root.add_edge(e.lo, e.hi);
            }
            if (connected_components(root).parts.size() == 1 && !contains_triangle(root) &&
                are_isomorphic(line_graph(root), h))
                return true;
            int i = m - 1;
            while (i >= 0 && pick[i] == slots - m + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return false;
}

struct RootOracle {
    std::unordered_map<std::uint64_t, bool> memo;

    bool operator()(const Graph& g) {
        for (const auto& part : connected_components(g).parts) {
            const Graph h = induced(g, part).graph;
            const std::uint64_t key =
                brute_canonical_mask(h) | (std::uint64_t(h.order()) << 56);
            auto it = memo.find(key);
            if (it == memo.end())
                it = memo.emplace(key, component_has_triangle_free_root(h)).first;
            if (!it->second) return false;
        }
        return true;
    }
};

// --- per-suite graph checks -------------------------------------------------

bool check_theorem1(const Graph& g) {
    const Certificate cert = classify_theorem1(g);
    if (is_positive(cert) != in_class_oracle(g)) return false;
    return verify_certificate(g, cert);
}

bool check_theorem2_23(const Graph& g) {
    return property2(g) == property3(g).holds();
}

bool check_claim(const Graph& g) {
    const auto coloring = two_coloring(g);
    if (!coloring) return true;  // the claim quantifies over bipartite graphs
    const LabeledGraph s = edge_graph(complement(g));
    if (!two_coloring(s.base)) return false;
    const auto parity = [&](const VertexPair& p) {
        return ((*coloring)[p.lo] + (*coloring)[p.hi]) & 1;
    };
    const int m = s.base.order();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (s.base.has_edge(i, j) && parity(s.labels[i]) == parity(s.labels[j]))
                return false;
    return true;
}

// --- sharded sweeps ---------------------------------------------------------

struct ShardResult {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> counterexamples;
};

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

SuiteReport merge_shards(std::vector<ShardResult>& shards) {
    SuiteReport report;
    for (auto& shard : shards) {
        report.checked += shard.checked;
        report.mismatches += shard.mismatches;
        for (auto& ce : shard.counterexamples) {
            if (report.counterexamples.size() >= counterexample_cap) break;
            report.counterexamples.push_back(std::move(ce));
        }
    }
    return report;
}

// make_check() builds one stateful predicate per worker.
template <typename MakeCheck>
SuiteReport sweep_graphs(int n, int jobs, MakeCheck make_check) {
    const std::uint64_t total = labeled_graph_count(n);
    const int nshards = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_jobs(jobs)), total));
    std::vector<ShardResult> shards(nshards);
    std::vector<std::thread> workers;
    workers.reserve(nshards);
    for (int s = 0; s < nshards; ++s) {
        const std::uint64_t begin = total / nshards * s + std::min<std::uint64_t>(s, total % nshards);
        const std::uint64_t end =
            total / nshards * (s + 1) + std::min<std::uint64_t>(s + 1, total % nshards);
        workers.emplace_back([&, s, begin, end] {
            auto check = make_check();
            ShardResult& out = shards[s];
            enumerate_graph_range(n, begin, end, [&](const Graph& g, std::uint64_t) {
                ++out.checked;
                if (!check(g)) {
                    ++out.mismatches;
                    if (out.counterexamples.size() < counterexample_cap)
                        out.counterexamples.push_back(graph6_encode(g));
                }
            });
        });
    }
    for (auto& w : workers) w.join();
    return merge_shards(shards);
}

// Pair sweep for the (1)=>(2) suite: u ranges over the shard, g over all
// graphs of the same order; checked counts pairs.
SuiteReport sweep_theorem2_12(int n, int jobs) {
    const std::uint64_t total = labeled_graph_count(n);
    const int nshards = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_jobs(jobs)), total));
    std::vector<ShardResult> shards(nshards);
    std::vector<std::thread> workers;
    workers.reserve(nshards);
    for (int s = 0; s < nshards; ++s) {
        const std::uint64_t begin = total / nshards * s + std::min<std::uint64_t>(s, total % nshards);
        const std::uint64_t end =
            total / nshards * (s + 1) + std::min<std::uint64_t>(s + 1, total % nshards);
        workers.emplace_back([&, s, begin, end] {
            ShardResult& out = shards[s];
            enumerate_graph_range(n, begin, end, [&](const Graph& u, std::uint64_t) {
                const bool p2 = property2(u);
                enumerate_graphs(n, [&](const Graph& g, std::uint64_t) {
                    ++out.checked;
                    if (same_3_homogeneous(g, boolean_sum(g, u)) && !p2) {
                        ++out.mismatches;
                        if (out.counterexamples.size() < counterexample_cap)
                            out.counterexamples.push_back(graph6_encode(u) + " " +
                                                          graph6_encode(g));
                    }
                });
            });
        });
    }
    for (auto& w : workers) w.join();
    return merge_shards(shards);
}

}  // namespace

Suite parse_suite(std::string_view name) {
    if (name == "theorem1") return Suite::theorem1;
    if (name == "theorem2-23") return Suite::theorem2_23;
    if (name == "theorem2-12") return Suite::theorem2_12;
    if (name == "star") return Suite::star;
    if (name == "claim") return Suite::claim;
    if (name == "harary") return Suite::harary;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) {
    switch (suite) {
        case Suite::theorem1: return "theorem1";
        case Suite::theorem2_23: return "theorem2-23";
        case Suite::theorem2_12: return "theorem2-12";
        case Suite::star: return "star";
        case Suite::claim: return "claim";
        case Suite::harary: return "harary";
    }
    return "";
}

int suite_max_order(Suite suite) {
    switch (suite) {
        case Suite::theorem1: return 8;
        case Suite::theorem2_23: return 7;
        case Suite::theorem2_12: return 5;
        case Suite::star: return 7;
        case Suite::claim: return 7;
        case Suite::harary: return 6;
    }
    return 0;
}

SuiteReport run_suite(Suite suite, int n, int jobs) {
    if (n < 0 || n > suite_max_order(suite))
        throw std::invalid_argument("suite " + std::string(suite_name(suite)) +
                                    " supports 0 <= n <= " +
                                    std::to_string(suite_max_order(suite)));
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    switch (suite) {
        case Suite::theorem1:
            report = sweep_graphs(n, jobs, [] { return check_theorem1; });
            break;
        case Suite::theorem2_23:
            report = sweep_graphs(n, jobs, [] { return check_theorem2_23; });
            break;
        case Suite::theorem2_12:
            report = sweep_theorem2_12(n, jobs);
            break;
        case Suite::star:
            report = sweep_graphs(n, jobs, [] { return star_equivalence_check; });
            break;
        case Suite::claim:
            report = sweep_graphs(n, jobs, [] { return check_claim; });
            break;
        case Suite::harary:
            report = sweep_graphs(n, jobs, [] {
                return [oracle = RootOracle{}](const Graph& g) mutable {
                    return is_claw_diamond_free(g) == oracle(g);
                };
            });
            break;
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_report(const SuiteReport& report) {
    std::ostringstream out;
    out << report.checked << " graphs, " << report.mismatches << " mismatches\n";
    for (const auto& ce : report.counterexamples) out << "counterexample: " << ce << '\n';
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "elapsed: " << report.seconds << "s\n";
    return out.str();
}

}  // namespace clawkit
