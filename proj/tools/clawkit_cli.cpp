#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "clawkit/decompose.hpp"
#include "clawkit/edge_graph.hpp"
#include "clawkit/graph_io.hpp"
#include "clawkit/homogeneous.hpp"
#include "clawkit/incidence.hpp"
#include "clawkit/structure.hpp"
#include "clawkit/verify.hpp"

namespace {

// Exit codes: 0 affirmative, 1 definite negative, 2 usage or parse error.
constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A leading digit means edge-list ("n m" header), anything else graph6.
clawkit::Graph parse_graph(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw std::runtime_error("empty input");
    if (std::isdigit(static_cast<unsigned char>(text[i])))
        return clawkit::parse_edge_list(text);
    std::istringstream in(text);
    std::string token;
    in >> token;
    return clawkit::graph6_decode(token);
}

clawkit::Graph read_graph(const std::string& path) {
    return parse_graph(read_input(path));
}

int run_classify(const std::string& path) {
    const clawkit::Graph g = read_graph(path);
    const clawkit::Certificate cert = clawkit::classify_theorem1(g);
    std::cout << clawkit::format_certificate(cert);
    return clawkit::is_positive(cert) ? exit_ok : exit_negative;
}

int run_edge_graph(const std::string& path, bool dot) {
    const clawkit::LabeledGraph s = clawkit::edge_graph(read_graph(path));
    std::cout << (dot ? clawkit::to_dot(s) : clawkit::format_labeled_graph(s));
    return exit_ok;
}

int run_homog(const std::string& path) {
    std::cout << clawkit::format_triples(clawkit::homogeneous_triples(read_graph(path)));
    return exit_ok;
}

int run_decompose(const std::string& path, bool dot) {
    const clawkit::Graph u = read_graph(path);
    const auto d = clawkit::decompose(u);
    if (!d) {
        std::cout << "no decomposition\n";
        return exit_negative;
    }
    if (dot)
        std::cout << clawkit::to_dot(d->g) << clawkit::to_dot(d->gp) << clawkit::to_dot(d->u);
    else
        std::cout << clawkit::format_decomposition(*d);
    return clawkit::verify_decomposition(*d) ? exit_ok : exit_negative;
}

int run_incidence(int v, int k, int t) {
    const clawkit::BinMatrix w = clawkit::build_w(t, k, v);
    const auto kernel = clawkit::gf2_kernel(clawkit::transpose(w));
    std::cout << "gf2 kernel dim: " << kernel.size() << '\n';
    std::cout << "rational rank: " << clawkit::rational_rank(clawkit::to_rational(w)) << '\n';
    if (t == 2 && k % 4 == 1 && k >= 2 && k <= v - 2) {
        const clawkit::WilsonKernelReport report = clawkit::wilson_kernel_members(v, k);
        std::cout << "kernel members: " << report.members.size() << '\n';
        for (const auto& member : report.members) {
            std::cout << clawkit::graph6_encode(member.graph) << ' ';
            if (member.complete_bipartite)
                std::cout << "complete-bipartite\n";
            else if (member.complement_complete_bipartite)
                std::cout << "co-complete-bipartite\n";
            else
                std::cout << "unclassified\n";
        }
        std::cout << "all classified: " << (report.all_classified ? "yes" : "no") << '\n';
        if (!report.all_classified) return exit_negative;
    }
    return exit_ok;
}

int run_verify(const std::string& suite_name, int n, int jobs) {
    const clawkit::SuiteReport report =
        clawkit::run_suite(clawkit::parse_suite(suite_name), n, jobs);
    std::cout << clawkit::format_report(report);
    return report.mismatches == 0 ? exit_ok : exit_negative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"claw-free graph structure, boolean-sum decomposition, and "
                 "subset-incidence toolkit"};
    app.require_subcommand(1);

    std::string input;
    bool dot = false;
    int v = 0, k = 0, t = 2;
    std::string suite;
    int n = 0, jobs = 0;

    auto* classify = app.add_subcommand(
        "classify", "certify membership in the claw-free co-claw-free family");
    classify->add_option("input", input, "graph file (graph6 or edge list); stdin if omitted");

    auto* edge_graph_cmd =
        app.add_subcommand("edge-graph", "edge-graph S(U) with vertex-pair labels");
    edge_graph_cmd->add_option("input", input, "graph file; stdin if omitted");
    edge_graph_cmd->add_flag("--dot", dot, "emit DOT instead of graph6 plus labels");

    auto* homog = app.add_subcommand("homog", "3-element homogeneous subsets, one per line");
    homog->add_option("input", input, "graph file; stdin if omitted");

    auto* decompose_cmd = app.add_subcommand(
        "decompose", "boolean-sum decomposition with equal 3-homogeneous sets");
    decompose_cmd->add_option("input", input, "graph file; stdin if omitted");
    decompose_cmd->add_flag("--dot", dot, "emit the three graphs as DOT");

    auto* incidence = app.add_subcommand(
        "incidence", "subset-inclusion matrix rank and kernel report");
    incidence->add_option("--v", v, "ground-set size")->required();
    incidence->add_option("--k", k, "column subset size")->required();
    incidence->add_option("--t", t, "row subset size")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "exhaustive property suites");
    verify->add_option("--suite", suite,
                       "one of theorem1, theorem2-23, theorem2-12, star, claim, harary")
        ->required();
    verify->add_option("--n", n, "number of vertices")->required();
    verify->add_option("--jobs", jobs, "worker count; 0 = hardware parallelism")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (classify->parsed()) return run_classify(input);
        if (edge_graph_cmd->parsed()) return run_edge_graph(input, dot);
        if (homog->parsed()) return run_homog(input);
        if (decompose_cmd->parsed()) return run_decompose(input, dot);
        if (incidence->parsed()) return run_incidence(v, k, t);
        if (verify->parsed()) return run_verify(suite, n, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
