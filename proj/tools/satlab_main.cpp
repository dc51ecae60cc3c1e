#include "satlab/clique.hpp"
#include "satlab/constructions.hpp"
#include "satlab/decomposition.hpp"
#include "satlab/errors.hpp"
#include "satlab/graph6.hpp"
#include "satlab/json_io.hpp"
#include "satlab/oracle.hpp"
#include "satlab/optimizer.hpp"
#include "satlab/saturation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace satlab;

std::vector<std::string> read_input_lines(const std::string& path)
{
    std::vector<std::string> lines;
    auto consume = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line))
            if (!line.empty())
                lines.push_back(line);
    };
    if (path.empty() || path == "-") {
        consume(std::cin);
    } else {
        std::ifstream f(path);
        if (!f)
            throw std::invalid_argument("cannot open input file " + path);
        consume(f);
    }
    if (lines.empty())
        throw std::invalid_argument("no graph6 input lines");
    return lines;
}

std::ostream& open_output(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw std::invalid_argument("cannot open output file " + path);
    return file;
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "' (expected p or p/q)");
    }
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse vertex list entry '" + item + "'");
        }
    }
    return out;
}

Graph pattern_by_name(const std::string& name, int r)
{
    if (name == "c5chord")
        return c5_with_chord();
    if (name == "edge")
        return Graph::from_edges(2, {{0, 1}});
    if (name == "joinpattern")
        return join_pattern(r);
    // otherwise treat as a graph6 literal
    return from_graph6(name);
}

struct Options {
    std::string input;
    std::string output;
    std::string construct_name;
    std::string pattern = "c5chord";
    std::string floor;
    std::string support;
    std::string classes_out;
    int r = 4;
    int n = 0;
    long long e = 0;
    int k = 0;
    int exact_limit = 24;
    std::uint64_t node_budget = 50'000'000;
    int restarts = 64;
    int max_iters = 2000;
    double tolerance = 1e-10;
    std::uint64_t seed = 1;
};

int run_construct(const Options& o)
{
    Graph g = [&] {
        if (o.construct_name == "H")
            return construct_h(o.n);
        if (o.construct_name == "Hprime")
            return construct_h_prime(o.n);
        if (o.construct_name == "Hminus")
            return construct_h_minus(o.n, o.k);
        if (o.construct_name == "bollobasF")
            return bollobas_f(o.n);
        if (o.construct_name == "turan2")
            return turan_bipartite(o.n);
        if (o.construct_name == "joinpattern")
            return join_pattern(o.r);
        throw std::invalid_argument("unknown construction '" + o.construct_name
            + "' (H, Hprime, Hminus, bollobasF, turan2, joinpattern)");
    }();
    std::ofstream file;
    auto& out = open_output(o.output, file);
    out << to_graph6(g) << '\n';
    return 0;
}

int run_count(const Options& o)
{
    auto lines = read_input_lines(o.input);
    std::ofstream file;
    auto& out = open_output(o.output, file);
    for (const auto& line : lines) {
        Graph g = from_graph6(line);
        auto report = count_saturating(g, o.r);
        out << count_json(g, report).dump() << '\n';
    }
    return 0;
}

int run_classify(const Options& o)
{
    auto lines = read_input_lines(o.input);
    if (lines.size() != 1)
        throw std::invalid_argument("classify expects exactly one graph6 line");
    Graph g = from_graph6(lines[0]);
    auto report = classify_nonedges(g, o.r);
    std::ofstream file;
    auto& out = open_output(o.output, file);
    write_classification_csv(out, report);
    return 0;
}

int run_audit(const Options& o)
{
    auto lines = read_input_lines(o.input);
    std::ofstream file;
    auto& out = open_output(o.output, file);
    for (const auto& line : lines) {
        Graph g = from_graph6(line);
        auto report = audit_report(g, PackingOptions{o.exact_limit, o.node_budget});
        out << audit_json(g, report).dump() << '\n';
    }
    return 0;
}

int run_oracle(const Options& o)
{
    OracleRecord rec = f_table(o.n, o.e);
    if (!o.classes_out.empty()) {
        std::ofstream classes(o.classes_out);
        if (!classes)
            throw std::invalid_argument("cannot open " + o.classes_out);
        enumerate_k4free(o.n, o.e, [&](const Graph& g) {
            classes << to_graph6(g) << '\n';
            return true;
        });
    }
    std::ofstream file;
    auto& out = open_output(o.output, file);
    out << oracle_json(rec).dump() << '\n';
    return 0;
}

int run_optimize(const Options& o)
{
    DensityProgram prog;
    prog.pattern = pattern_by_name(o.pattern, o.r);
    prog.r = o.r;
    prog.required_support = VertexSet(prog.pattern.vertex_count());
    for (int v : parse_int_list(o.support))
        prog.required_support.set(v);
    if (!o.floor.empty())
        prog.edge_density_floor = parse_rational(o.floor);
    prog.restarts = o.restarts;
    prog.max_iters = o.max_iters;
    prog.tolerance = o.tolerance;
    prog.seed = o.seed;
    auto result = optimize(prog);
    std::ofstream file;
    auto& out = open_output(o.output, file);
    out << optimize_json(prog, result).dump() << '\n';
    return 0;
}

int run_reduce(const Options& o)
{
    auto lines = read_input_lines(o.input);
    std::ofstream file;
    auto& out = open_output(o.output, file);
    for (const auto& line : lines)
        out << to_graph6(reduce_preserving_triangle(from_graph6(line))) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"satlab: K_r-saturating edge counts, constructions, audits and bounds"};
    app.require_subcommand(1);

    Options o;

    auto* construct = app.add_subcommand("construct", "emit a named construction as graph6");
    construct->add_option("name", o.construct_name, "H|Hprime|Hminus|bollobasF|turan2|joinpattern")
        ->required();
    construct->add_option("--n", o.n, "vertex count");
    construct->add_option("--k", o.k, "edges to remove (Hminus)");
    construct->add_option("--r", o.r, "clique order (joinpattern)");
    construct->add_option("--output", o.output, "output path (default stdout)");

    auto* count = app.add_subcommand("count", "count K_r-saturating non-edges");
    count->add_option("--r", o.r, "clique order (default 4)");
    count->add_option("--input", o.input, "graph6 input path (default stdin)");
    count->add_option("--output", o.output, "output path");

    auto* classify = app.add_subcommand("classify", "CSV verdict for every non-edge");
    classify->add_option("--r", o.r, "clique order (default 4)");
    classify->add_option("--input", o.input, "graph6 input path (default stdin)");
    classify->add_option("--output", o.output, "output path");

    auto* audit = app.add_subcommand("audit", "decomposition report with lemma audits");
    audit->add_option("--exact-limit", o.exact_limit, "max n for exact packing (default 24)");
    audit->add_option("--node-budget", o.node_budget, "packing search node budget");
    audit->add_option("--input", o.input, "graph6 input path (default stdin)");
    audit->add_option("--output", o.output, "output path");

    auto* oracle = app.add_subcommand("oracle", "exact f(n,e) by exhaustive enumeration");
    oracle->add_option("--n", o.n, "vertex count")->required();
    oracle->add_option("--e", o.e, "edge count")->required();
    oracle->add_option("--classes-out", o.classes_out, "write one graph6 line per class");
    oracle->add_option("--output", o.output, "output path");

    auto* optimize = app.add_subcommand("optimize", "minimize saturating density over a pattern");
    optimize->add_option("--pattern", o.pattern, "c5chord|edge|joinpattern or graph6 literal");
    optimize->add_option("--r", o.r, "clique order (default 4)");
    optimize->add_option("--floor", o.floor, "edge density floor as p/q (default 1/4)");
    optimize->add_option("--support", o.support, "comma-separated required-support parts");
    optimize->add_option("--restarts", o.restarts, "restart count (default 64)");
    optimize->add_option("--max-iters", o.max_iters, "iterations per restart");
    optimize->add_option("--tolerance", o.tolerance, "step tolerance");
    optimize->add_option("--seed", o.seed, "RNG seed (default 1)");
    optimize->add_option("--output", o.output, "output path");

    auto* reduce = app.add_subcommand("reduce", "remove one edge keeping a triangle");
    reduce->add_option("--input", o.input, "graph6 input path (default stdin)");
    reduce->add_option("--output", o.output, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (construct->parsed())
            return run_construct(o);
        if (count->parsed())
            return run_count(o);
        if (classify->parsed())
            return run_classify(o);
        if (audit->parsed())
            return run_audit(o);
        if (oracle->parsed())
            return run_oracle(o);
        if (optimize->parsed())
            return run_optimize(o);
        if (reduce->parsed())
            return run_reduce(o);
        std::cerr << app.help();
        return 2;
    } catch (const satlab::Graph6ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
