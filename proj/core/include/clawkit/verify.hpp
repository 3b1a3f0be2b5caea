#ifndef CLAWKIT_VERIFY_HPP
#define CLAWKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace clawkit {

/// Exhaustive property suites. Each sweeps every labeled graph (or graph
/// pair) on n vertices and compares an implementation against an
/// independently coded oracle or a second route to the same fact.
enum class Suite {
    theorem1,     // certifying classifier vs. brute-force claw/co-claw detection
    theorem2_23,  // bipartite edge-graphs iff component/rook-graph structure
    theorem2_12,  // equal 3-homogeneous sets of a summand pair forces bipartite edge-graphs
    star,         // claw-freeness iff triangle-free edge-graph
    claim,        // derived coloring is proper on the complement's edge-graph
    harary,       // claw- and diamond-free iff line graph of a triangle-free root
};

Suite parse_suite(std::string_view name);  // throws std::invalid_argument
std::string_view suite_name(Suite suite);

/// Largest order the suite is meant to run at (enumeration stays exhaustive
/// and the oracles stay affordable).
int suite_max_order(Suite suite);

struct SuiteReport {
    std::uint64_t checked = 0;     // graphs, or (u, g) pairs for pair suites
    std::uint64_t mismatches = 0;
    std::vector<std::string> counterexamples;  // graph6 (pairs space-separated), capped
    double seconds = 0.0;
};

/// Runs the suite over all graphs on exactly n vertices, sharded over
/// jobs workers (jobs <= 0 picks the hardware concurrency). Deterministic
/// for fixed arguments. Throws std::invalid_argument when n is negative or
/// beyond the suite cap.
SuiteReport run_suite(Suite suite, int n, int jobs = 0);

/// First line "<checked> graphs, <mismatches> mismatches", then one
/// "counterexample: ..." line each, then "elapsed: <seconds>s".
std::string format_report(const SuiteReport& report);

}  // namespace clawkit

#endif  // CLAWKIT_VERIFY_HPP
