#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gmatch/generate.hpp"
#include "gmatch/net_sim.hpp"
#include "gmatch/reference.hpp"
#include "gmatch/trace.hpp"

namespace gmatch {

enum class OutputFormat { text, csv, jsonl };

OutputFormat parse_output_format(std::string_view name);

struct FileSource {
    std::string path;
};

/// `instances` graphs generated with seeds first_seed, first_seed + 1, ...
struct GeneratorSource {
    GraphSpec spec;
    WeightPolicy weights;
    std::size_t instances = 1;
    std::uint64_t first_seed = 1;
};

using GraphSource = std::variant<FileSource, GeneratorSource>;

/// Parses "kind:key=value:..." with keys n, p, left, weights, instances, seed.
/// Example: "random_gnp:n=10:p=0.4:weights=distinct:instances=100".
GeneratorSource parse_generator_source(std::string_view text);

struct ExperimentConfig {
    std::vector<GraphSource> sources;
    std::vector<SchedulerPolicy> policies{SchedulerPolicy::random};
    std::vector<std::uint64_t> seeds{1};
    bool check = true;
    std::size_t oracle_limit = kDefaultOracleLimit;
    OutputFormat format = OutputFormat::text;
};

/// Throws std::invalid_argument if there is no source, no policy, no seed,
/// or a repeated seed.
void validate(const ExperimentConfig& config);

struct NamedGraph {
    std::string id;
    WeightedGraph graph;
};

std::vector<NamedGraph> materialize(const std::vector<GraphSource>& sources);

struct RunRow {
    std::string graph_id;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    SchedulerPolicy policy = SchedulerPolicy::random;
    std::uint64_t seed = 0;
    Matching distributed;
    Weight sequential_weight;
    bool matches_sequential = false;
    std::optional<Weight> optimal_weight;  ///< empty when above the oracle limit
    std::optional<Weight> ratio;           ///< distributed / optimal
    RunStats stats;
    std::vector<Verdict> verdicts;  ///< empty when checks are off

    /// Checkers pass, the result equals the sequential one and, when the
    /// optimum is known, 1/2 <= ratio <= 1.
    bool ok() const;
};

struct ExperimentSummary {
    std::size_t runs = 0;
    std::size_t failed = 0;
    std::size_t not_verified = 0;
    std::optional<Weight> min_ratio;
    double mean_ratio = 0.0;
    /// max over runs of messages_total / (2|E|); empty if no run had edges.
    std::optional<Weight> max_message_ratio;
    /// Largest number of different matchings seen for a single graph.
    std::size_t max_distinct_matchings = 0;
};

struct ExperimentReport {
    std::vector<RunRow> rows;
    ExperimentSummary summary;

    bool ok() const { return summary.failed == 0; }
};

/// One cell: simulate, compare with the sequential result and, if |V| is
/// within the limit, the exact optimum.
RunRow evaluate_run(const std::string& graph_id, const WeightedGraph& g, SchedulerPolicy policy,
                    std::uint64_t seed, bool check, std::size_t oracle_limit);

/// Rows come out ordered by graph (source order), then policy, then seed.
ExperimentReport run_experiment(const ExperimentConfig& config);

ExperimentSummary summarize(const std::vector<RunRow>& rows);

void write_report(std::ostream& os, const ExperimentReport& report, OutputFormat format);

std::string format_matching(const Matching& m);

} // namespace gmatch
