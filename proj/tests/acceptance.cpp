// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. All thresholds are exact (rational arithmetic).

#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmatch/experiment.hpp"
#include "gmatch/generate.hpp"
#include "gmatch/graph_io.hpp"
#include "gmatch/net_sim.hpp"
#include "gmatch/reference.hpp"
#include "gmatch/trace.hpp"
#include "support/naive_oracle.hpp"

using namespace gmatch;

namespace {

const std::vector<SchedulerPolicy> kPolicies{SchedulerPolicy::random, SchedulerPolicy::fifo, SchedulerPolicy::lifo,
                                             SchedulerPolicy::adversarial_heavy_last};

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

// Shared bookkeeping for criteria 4, 5 and 6, fed by the runs of 1-3.
struct Ledger {
    std::size_t runs = 0;
    Outcome message_bound;
    Outcome checkers;
    std::vector<WeightedGraph> small_graphs;  // |V| <= 10

    void record(const WeightedGraph& g, const SimulationResult& r, const std::string& where) {
        ++runs;
        if (r.stats.messages_total > 2 * g.edge_count()) {
            message_bound.fail(where + ": " + std::to_string(r.stats.messages_total) + " messages > 2|E|");
        }
        std::map<std::pair<NodeId, NodeId>, int> per_edge;
        for (const auto& ev : r.trace.events) {
            if (ev.kind == TraceEventKind::send && ++per_edge[{ev.src, *ev.dst}] > 1) {
                message_bound.fail(where + ": node " + std::to_string(ev.src) + " sent twice to " +
                                   std::to_string(*ev.dst));
            }
        }
        for (const auto& v : check_trace(g, r.trace)) {
            if (!v.passed) checkers.fail(where + ": " + to_string(v.proposition) + " " + v.detail);
        }
    }

    void keep_small(const WeightedGraph& g) {
        if (g.vertex_count() <= 10) small_graphs.push_back(g);
    }
};

WeightedGraph mixed_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n, bool distinct_only) {
    std::uniform_int_distribution<std::size_t> pick_n(min_n, max_n);
    std::uniform_int_distribution<int> pick_kind(0, 6);
    std::uniform_int_distribution<int> pick_weights(0, 4);
    std::uniform_real_distribution<double> pick_p(0.15, 0.85);
    GraphSpec spec;
    spec.n = pick_n(rng);
    spec.kind = static_cast<GraphKind>(pick_kind(rng));
    if (spec.kind == GraphKind::cycle && spec.n < 3) spec.kind = GraphKind::path;
    spec.p = pick_p(rng);
    spec.left = spec.n / 3;
    WeightPolicy weights;
    switch (distinct_only ? 0 : pick_weights(rng)) {
    case 0: weights = WeightPolicy::distinct(); break;
    case 1: weights = WeightPolicy::uniform(3); break;
    case 2: weights = WeightPolicy::uniform(20); break;
    case 3: weights = WeightPolicy::equal(7); break;
    default: weights = WeightPolicy::adversarial(10); break;
    }
    return generate(spec, rng(), weights);
}

std::string where(std::size_t graph, SchedulerPolicy p, std::uint64_t seed) {
    return "graph " + std::to_string(graph) + " " + to_string(p) + "/" + std::to_string(seed);
}

Outcome approximation_bound(Ledger& ledger) {
    Outcome out;
    std::mt19937_64 rng(1);
    constexpr std::size_t kGraphs = 1200;
    constexpr int kSeedsPerGraph = 3;
    std::optional<Weight> min_ratio;
    std::size_t runs = 0;
    for (std::size_t i = 0; i < kGraphs; ++i) {
        WeightedGraph g = mixed_graph(rng, 0, 12, false);
        ledger.keep_small(g);
        Weight optimum = optimal_matching(g).total_weight;
        for (int k = 0; k < kSeedsPerGraph; ++k) {
            std::uint64_t seed = rng();
            auto r = simulate(g, Scheduler(SchedulerPolicy::random, seed));
            ledger.record(g, r, where(i, SchedulerPolicy::random, seed));
            ++runs;
            if (!is_valid_matching(g, r.matching)) out.fail(where(i, SchedulerPolicy::random, seed) + ": invalid matching");
            if (Weight(2) * r.matching.total_weight < optimum) {
                out.fail(where(i, SchedulerPolicy::random, seed) + ": " + r.matching.total_weight.to_string() +
                         " < optimum " + optimum.to_string() + " / 2");
            }
            if (optimum.is_positive()) {
                Weight ratio = r.matching.total_weight / optimum;
                if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
            }
        }
    }
    if (out.passed) {
        out.detail = std::to_string(kGraphs) + " graphs x " + std::to_string(kSeedsPerGraph) + " seeds = " +
                     std::to_string(runs) + " runs, min ratio " + (min_ratio ? min_ratio->to_string() : "-");
    }
    return out;
}

Outcome near_tightness(Ledger& ledger) {
    Outcome out;
    std::size_t runs = 0;
    for (std::int64_t w : {1, 2, 3, 10, 999, 1000, 123456}) {
        WeightedGraph g = generate({GraphKind::path, 4}, 0, WeightPolicy::adversarial(w));
        Weight optimum = optimal_matching(g).total_weight;
        if (optimum != Weight(2 * w)) out.fail("w=" + std::to_string(w) + ": optimum " + optimum.to_string());
        for (auto policy : kPolicies) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                auto r = simulate(g, Scheduler(policy, seed));
                ledger.record(g, r, "tight w=" + std::to_string(w));
                ++runs;
                Weight ratio = r.matching.total_weight / optimum;
                if (ratio != Weight(w + 1, 2 * w)) {
                    out.fail("w=" + std::to_string(w) + " " + to_string(policy) + ": ratio " + ratio.to_string());
                }
            }
        }
    }
    if (out.passed) out.detail = std::to_string(runs) + " runs, w=1000 gives " + Weight(1001, 2000).to_string();
    return out;
}

Outcome confluence(Ledger& ledger) {
    Outcome out;
    std::mt19937_64 rng(3);
    constexpr std::size_t kGraphs = 200;
    constexpr std::uint64_t kSeeds = 50;
    std::size_t runs = 0;
    for (std::size_t i = 0; i < kGraphs; ++i) {
        WeightedGraph g = mixed_graph(rng, 2, 30, true);
        ledger.keep_small(g);
        Matching greedy = sequential_greedy(g);
        for (auto policy : kPolicies) {
            for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
                auto r = simulate(g, Scheduler(policy, seed));
                ledger.record(g, r, where(i, policy, seed));
                ++runs;
                if (r.matching != greedy) {
                    out.fail(where(i, policy, seed) + ": " + format_matching(r.matching) + " != sequential " +
                             format_matching(greedy));
                }
            }
        }
    }
    if (out.passed) {
        out.detail = std::to_string(kGraphs) + " distinct-weight graphs x 4 policies x " + std::to_string(kSeeds) +
                     " seeds = " + std::to_string(runs) + " runs, all equal to sequential greedy";
    }
    return out;
}

Outcome message_bound(const Ledger& ledger) {
    Outcome out = ledger.message_bound;
    WeightedGraph star = generate({GraphKind::star, 4}, 0, WeightPolicy::explicit_weights({1, 2, 3}));
    for (auto policy : kPolicies) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            auto r = simulate(star, Scheduler(policy, seed));
            if (r.stats.messages_total != 6) {
                out.fail("star " + std::string(to_string(policy)) + ": " + std::to_string(r.stats.messages_total) +
                         " messages, expected 6");
            }
        }
    }
    if (out.passed) out.detail = std::to_string(ledger.runs) + " runs within bound; K1,3 uses exactly 6 = 2|E|";
    return out;
}

Outcome checkers(const Ledger& ledger) {
    Outcome out = ledger.checkers;
    // Self-tests: corrupt a known-good trace one way per proposition.
    WeightedGraph g = new_graph(6, {{0, 1, 1}, {1, 2, 5}, {2, 3, 2}, {3, 4, 4}, {4, 5, 3}});
    auto r = simulate(g, Scheduler(SchedulerPolicy::random, 5));
    auto failed = [&](const Trace& t, Proposition p) {
        for (const auto& v : check_trace(g, t))
            if (v.proposition == p) return !v.passed;
        return false;
    };
    std::size_t self_tests = 0;
    auto expect_fail = [&](const Trace& t, Proposition p, const char* name) {
        ++self_tests;
        if (!failed(t, p)) out.fail(std::string("corrupted trace not caught: ") + name);
    };

    Trace t = r.trace;
    std::size_t light = r.trace.matches[0].u == 1 ? 0 : 1;  // the (1,2) match
    t.matches[light].u = 0;
    t.matches[light].v = 1;
    t.matches[light].edge = *g.find_edge(0, 1);
    expect_fail(t, Proposition::locally_heaviest, "P5 lighter edge");

    t = r.trace;
    t.matches[1] = t.matches[0];
    t.matches[1].index = 2;
    expect_fail(t, Proposition::match_edge_remains, "P3 repeated edge");

    t = r.trace;
    for (const auto& ev : r.trace.events) {
        if (ev.kind == TraceEventKind::send) {
            t.events.push_back(ev);
            break;
        }
    }
    expect_fail(t, Proposition::one_message_per_edge, "P1 repeated send");

    t = r.trace;
    t.matches.pop_back();
    std::erase_if(t.snapshots, [&](const LiveSetSnapshot& s) { return s.after_match > t.matches.size(); });
    expect_fail(t, Proposition::termination, "P4 residual edges");

    t = r.trace;
    t.snapshots.front().live[2].erase(3);
    expect_fail(t, Proposition::live_sets_cover_edges, "P2 live set");

    if (out.passed) {
        out.detail = "P1-P5 pass on " + std::to_string(ledger.runs) + " runs; " + std::to_string(self_tests) +
                     " corrupted traces rejected";
    }
    return out;
}

Outcome oracle_integrity(const Ledger& ledger) {
    Outcome out;
    std::vector<WeightedGraph> corpus = ledger.small_graphs;
    corpus.push_back(new_graph(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, 2}}));
    corpus.push_back(new_graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}}));
    corpus.push_back(generate({GraphKind::complete, 10}, 1, WeightPolicy::uniform(5)));
    for (const auto& g : corpus) {
        Matching best = optimal_matching(g);
        Weight naive = testing::naive_max_weight(g);
        if (!is_valid_matching(g, best) || best.total_weight != naive) {
            out.fail("oracle " + best.total_weight.to_string() + " vs enumeration " + naive.to_string() + " on\n" +
                     serialize_graph(g));
        }
    }
    if (out.passed) out.detail = std::to_string(corpus.size()) + " graphs with |V| <= 10 agree with enumeration";
    return out;
}

Outcome determinism() {
    Outcome out;
    std::mt19937_64 rng(7);
    std::size_t compared = 0;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t gseed = rng();
        GraphSpec spec{GraphKind::random_gnp, 14, 0.4};
        WeightedGraph g = generate(spec, gseed, WeightPolicy::uniform(6));
        if (serialize_graph(g) != serialize_graph(generate(spec, gseed, WeightPolicy::uniform(6)))) {
            out.fail("generator output differs for seed " + std::to_string(gseed));
        }
        for (auto policy : kPolicies) {
            std::ostringstream a, b;
            write_trace_jsonl(a, g, simulate(g, Scheduler(policy, gseed)).trace);
            write_trace_jsonl(b, g, simulate(g, Scheduler(policy, gseed)).trace);
            ++compared;
            if (a.str() != b.str()) out.fail("trace differs: " + where(i, policy, gseed));
        }
    }

    ExperimentConfig config;
    config.sources.emplace_back(parse_generator_source("random_gnp:n=11:p=0.4:weights=uniform:instances=30"));
    config.sources.emplace_back(parse_generator_source("random_tree:n=25:weights=distinct:instances=10"));
    config.policies = kPolicies;
    config.seeds = {11, 12, 13};
    for (auto format : {OutputFormat::text, OutputFormat::csv, OutputFormat::jsonl}) {
        std::ostringstream a, b;
        write_report(a, run_experiment(config), format);
        write_report(b, run_experiment(config), format);
        ++compared;
        if (a.str() != b.str()) out.fail("experiment report differs");
    }
    if (out.passed) out.detail = std::to_string(compared) + " repeated traces/reports byte-identical";
    return out;
}

} // namespace

int main() {
    Ledger ledger;
    struct Line {
        const char* name;
        Outcome outcome;
    };
    std::vector<Line> lines;
    lines.push_back({"1 approximation bound", approximation_bound(ledger)});
    lines.push_back({"2 near-tightness", near_tightness(ledger)});
    lines.push_back({"3 confluence with sequential greedy", confluence(ledger)});
    lines.push_back({"4 message bound", message_bound(ledger)});
    lines.push_back({"5 proposition checkers", checkers(ledger)});
    lines.push_back({"6 oracle integrity", oracle_integrity(ledger)});
    lines.push_back({"7 determinism", determinism()});

    bool all = true;
    for (const auto& line : lines) {
        all = all && line.outcome.passed;
        std::cout << (line.outcome.passed ? "[PASS] " : "[FAIL] ") << line.name << ": " << line.outcome.detail << '\n';
    }
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return all ? 0 : 1;
}
