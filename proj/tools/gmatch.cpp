// gmatch: generate weighted graphs, run the distributed greedy matching
// protocol on the simulated network, and compare against the sequential
// greedy and exact matchers.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmatch/experiment.hpp"
#include "gmatch/generate.hpp"
#include "gmatch/graph_io.hpp"
#include "gmatch/net_sim.hpp"
#include "gmatch/reference.hpp"
#include "gmatch/trace.hpp"

using namespace gmatch;

namespace {

struct GenOptions {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::string weights = "distinct";
    double p = 0.5;
    std::size_t left = 0;
    std::int64_t base = 0;
    std::int64_t max_weight = 0;
    std::string output;
};

struct RunOptions {
    std::string graph;
    std::string scheduler = "random";
    std::uint64_t seed = 1;
    bool check = false;
    std::size_t oracle_limit = kDefaultOracleLimit;
    std::string format = "text";
    std::string trace_path;
};

struct ExperimentOptions {
    std::vector<std::string> files;
    std::vector<std::string> generators;
    std::string scheduler = "random";
    std::vector<std::uint64_t> seeds;
    std::size_t seed_count = 0;
    bool no_check = false;
    std::size_t oracle_limit = kDefaultOracleLimit;
    std::string format = "text";
};

int cmd_gen(const GenOptions& o) {
    GraphSpec spec{parse_graph_kind(o.kind), o.n, o.p, o.left};
    WeightPolicy policy = parse_weight_policy(o.weights);
    if (o.base > 0) policy.base = o.base;
    if (o.max_weight > 0) policy.max_weight = o.max_weight;
    WeightedGraph g = generate(spec, o.seed, policy);
    if (o.output.empty()) {
        std::cout << serialize_graph(g);
    } else {
        write_graph_file(o.output, g);
    }
    return 0;
}

int cmd_run(const RunOptions& o) {
    WeightedGraph g = read_graph_file(o.graph);
    SchedulerPolicy policy = parse_scheduler_policy(o.scheduler);
    OutputFormat format = parse_output_format(o.format);
    SimulationResult sim = simulate(g, Scheduler(policy, o.seed));

    if (!o.trace_path.empty()) {
        std::ofstream out(o.trace_path);
        if (!out) throw std::runtime_error("cannot write '" + o.trace_path + "'");
        write_trace_jsonl(out, g, sim.trace);
    }

    if (format != OutputFormat::text) {
        ExperimentReport report;
        report.rows.push_back(evaluate_run(o.graph, g, policy, o.seed, o.check, o.oracle_limit));
        report.summary = summarize(report.rows);
        write_report(std::cout, report, format);
        return report.ok() ? 0 : 1;
    }

    std::cout << "graph: " << o.graph << " (n=" << g.vertex_count() << ", m=" << g.edge_count() << ")\n"
              << "scheduler: " << to_string(policy) << " seed=" << o.seed << '\n'
              << "matching: " << format_matching(sim.matching) << '\n'
              << "weight: " << sim.matching.total_weight << '\n'
              << "messages: " << sim.stats.messages_total << " (req " << sim.stats.messages_req << ", drop "
              << sim.stats.messages_drop << "), deliveries: " << sim.stats.steps << '\n';
    if (!o.check) return 0;

    RunRow row = evaluate_run(o.graph, g, policy, o.seed, true, o.oracle_limit);
    for (const auto& v : row.verdicts) {
        std::cout << "check " << to_string(v.proposition) << " " << (v.passed ? "pass" : "FAIL") << "  "
                  << describe(v.proposition) << " [" << v.detail << "]\n";
    }
    std::cout << "sequential: " << row.sequential_weight << (row.matches_sequential ? " (same matching)" : " (DIFFERENT matching)")
              << '\n';
    if (row.optimal_weight) {
        std::cout << "optimal: " << *row.optimal_weight << ", ratio " << *row.ratio << '\n';
    } else {
        std::cout << "optimal: not verified (n > " << o.oracle_limit << ")\n";
    }
    std::cout << (row.ok() ? "result: ok" : "result: FAILED") << '\n';
    return row.ok() ? 0 : 1;
}

int cmd_seq(const std::string& path) {
    WeightedGraph g = read_graph_file(path);
    Matching m = sequential_greedy(g);
    std::cout << "matching: " << format_matching(m) << "\nweight: " << m.total_weight << '\n';
    return 0;
}

int cmd_opt(const std::string& path, std::size_t limit) {
    WeightedGraph g = read_graph_file(path);
    Matching m = optimal_matching(g, limit);
    std::cout << "matching: " << format_matching(m) << "\nweight: " << m.total_weight << '\n';
    return 0;
}

int cmd_experiment(const ExperimentOptions& o) {
    ExperimentConfig config;
    for (const auto& f : o.files) config.sources.emplace_back(FileSource{f});
    for (const auto& spec : o.generators) config.sources.emplace_back(parse_generator_source(spec));
    if (o.scheduler == "all") {
        config.policies = {SchedulerPolicy::random, SchedulerPolicy::fifo, SchedulerPolicy::lifo,
                           SchedulerPolicy::adversarial_heavy_last};
    } else {
        config.policies = {parse_scheduler_policy(o.scheduler)};
    }
    if (!o.seeds.empty()) {
        config.seeds = o.seeds;
    } else if (o.seed_count > 0) {
        config.seeds.clear();
        for (std::uint64_t s = 1; s <= o.seed_count; ++s) config.seeds.push_back(s);
    }
    config.check = !o.no_check;
    config.oracle_limit = o.oracle_limit;
    config.format = parse_output_format(o.format);

    ExperimentReport report = run_experiment(config);
    write_report(std::cout, report, config.format);
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed greedy weighted matching: generator, simulator and checker"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in the text format");
    gen_cmd->add_option("kind", gen.kind, "path|cycle|star|complete|random_gnp|random_tree|bipartite")->required();
    gen_cmd->add_option("n", gen.n, "Number of vertices")->required();
    gen_cmd->add_option("--seed", gen.seed, "Generator seed");
    gen_cmd->add_option("--weights", gen.weights, "distinct|uniform|equal|adversarial or a list like 2,3,2");
    gen_cmd->add_option("--p", gen.p, "Edge probability (random_gnp, bipartite)");
    gen_cmd->add_option("--left", gen.left, "Left side size (bipartite)");
    gen_cmd->add_option("--base", gen.base, "Weight for equal, w for adversarial");
    gen_cmd->add_option("--max-weight", gen.max_weight, "Upper bound for uniform weights");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Simulate the distributed protocol on a graph file");
    run_cmd->add_option("graph", run.graph, "Graph file")->required();
    run_cmd->add_option("--scheduler", run.scheduler, "random|fifo|lifo|adversarial");
    run_cmd->add_option("--seed", run.seed, "Scheduler seed");
    run_cmd->add_flag("--check", run.check, "Run trace checkers and compare with sequential/optimal");
    run_cmd->add_option("--oracle-limit", run.oracle_limit, "Largest |V| for the exact oracle");
    run_cmd->add_option("--format", run.format, "text|csv|jsonl");
    run_cmd->add_option("--trace", run.trace_path, "Write the event trace as JSON lines");

    std::string seq_path;
    auto* seq_cmd = app.add_subcommand("seq", "Sequential greedy matching of a graph file");
    seq_cmd->add_option("graph", seq_path, "Graph file")->required();

    std::string opt_path;
    std::size_t opt_limit = kDefaultOracleLimit;
    auto* opt_cmd = app.add_subcommand("opt", "Exact maximum weight matching of a small graph file");
    opt_cmd->add_option("graph", opt_path, "Graph file")->required();
    opt_cmd->add_option("--oracle-limit", opt_limit, "Largest |V| accepted");

    ExperimentOptions exp;
    auto* exp_cmd = app.add_subcommand("experiment", "Batch runs over graphs x schedulers x seeds");
    exp_cmd->add_option("--graph", exp.files, "Graph file (repeatable)");
    exp_cmd->add_option("--gen", exp.generators, "Generator spec kind:n=..:p=..:weights=..:instances=..:seed=..");
    exp_cmd->add_option("--scheduler", exp.scheduler, "random|fifo|lifo|adversarial|all");
    exp_cmd->add_option("--seed", exp.seeds, "Scheduler seeds (repeatable)");
    exp_cmd->add_option("--seeds", exp.seed_count, "Use scheduler seeds 1..N");
    exp_cmd->add_flag("--no-check", exp.no_check, "Skip trace checkers");
    exp_cmd->add_option("--oracle-limit", exp.oracle_limit, "Largest |V| for the exact oracle");
    exp_cmd->add_option("--format", exp.format, "text|csv|jsonl");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) return cmd_gen(gen);
        if (*run_cmd) return cmd_run(run);
        if (*seq_cmd) return cmd_seq(seq_path);
        if (*opt_cmd) return cmd_opt(opt_path, opt_limit);
        if (*exp_cmd) return cmd_experiment(exp);
    } catch (const std::exception& e) {
        std::cerr << "gmatch: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
