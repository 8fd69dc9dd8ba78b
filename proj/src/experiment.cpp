#include "gmatch/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gmatch/graph_io.hpp"

namespace gmatch {

OutputFormat parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "jsonl") return OutputFormat::jsonl;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad value '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

std::string source_id(const GeneratorSource& src, std::uint64_t seed) {
    std::ostringstream id;
    id << to_string(src.spec.kind) << ":n=" << src.spec.n;
    if (src.spec.kind == GraphKind::random_gnp || src.spec.kind == GraphKind::bipartite) id << ":p=" << src.spec.p;
    if (src.spec.kind == GraphKind::bipartite) id << ":left=" << src.spec.left;
    id << ":weights=" << to_string(src.weights) << ":seed=" << seed;
    return id.str();
}

struct Reference {
    Matching sequential;
    std::optional<Weight> optimal;
};

Reference reference_for(const WeightedGraph& g, std::size_t oracle_limit) {
    Reference ref{sequential_greedy(g), std::nullopt};
    if (g.vertex_count() <= std::min(oracle_limit, kOracleHardLimit)) {
        ref.optimal = optimal_matching(g, oracle_limit).total_weight;
    }
    return ref;
}

RunRow evaluate_with(const std::string& graph_id, const WeightedGraph& g, const Reference& ref,
                     SchedulerPolicy policy, std::uint64_t seed, bool check) {
    SimulationResult sim;
    try {
        sim = simulate(g, Scheduler(policy, seed));
    } catch (const std::exception& e) {
        throw std::runtime_error(graph_id + " [" + to_string(policy) + " seed " + std::to_string(seed) +
                                 "]: " + e.what());
    }
    RunRow row;
    row.graph_id = graph_id;
    row.vertices = g.vertex_count();
    row.edges = g.edge_count();
    row.policy = policy;
    row.seed = seed;
    row.distributed = sim.matching;
    row.sequential_weight = ref.sequential.total_weight;
    row.matches_sequential = sim.matching == ref.sequential;
    row.optimal_weight = ref.optimal;
    if (ref.optimal) {
        row.ratio = ref.optimal->is_positive() ? sim.matching.total_weight / *ref.optimal : Weight(1);
    }
    row.stats = sim.stats;
    if (check) row.verdicts = check_trace(g, sim.trace);
    return row;
}

std::string csv_field(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json row_json(const RunRow& row) {
    nlohmann::ordered_json j;
    j["graph"] = row.graph_id;
    j["n"] = row.vertices;
    j["m"] = row.edges;
    j["scheduler"] = to_string(row.policy);
    j["seed"] = row.seed;
    j["distributed"] = row.distributed.total_weight.to_string();
    j["sequential"] = row.sequential_weight.to_string();
    j["optimal"] = row.optimal_weight ? nlohmann::ordered_json(row.optimal_weight->to_string())
                                      : nlohmann::ordered_json("not_verified");
    j["ratio"] = row.ratio ? nlohmann::ordered_json(row.ratio->to_string()) : nlohmann::ordered_json(nullptr);
    j["messages"] = row.stats.messages_total;
    j["req"] = row.stats.messages_req;
    j["drop"] = row.stats.messages_drop;
    j["steps"] = row.stats.steps;
    j["matches_sequential"] = row.matches_sequential;
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& v : row.verdicts) checks[to_string(v.proposition)] = v.passed ? "pass" : "fail";
    j["checks"] = checks;
    j["matching"] = format_matching(row.distributed);
    j["ok"] = row.ok();
    return j;
}

} // namespace

GeneratorSource parse_generator_source(std::string_view text) {
    auto colon = text.find(':');
    GeneratorSource src;
    src.spec.kind = parse_graph_kind(text.substr(0, colon));
    bool have_n = false;
    while (colon != std::string_view::npos) {
        std::size_t start = colon + 1;
        colon = text.find(':', start);
        std::string_view field = text.substr(start, colon == std::string_view::npos ? colon : colon - start);
        auto eq = field.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value, got '" + std::string(field) + "'");
        std::string_view key = field.substr(0, eq);
        std::string_view value = field.substr(eq + 1);
        if (key == "n") {
            src.spec.n = parse_number<std::size_t>(key, value);
            have_n = true;
        } else if (key == "p") {
            src.spec.p = std::stod(std::string(value));
        } else if (key == "left") {
            src.spec.left = parse_number<std::size_t>(key, value);
        } else if (key == "weights") {
            src.weights = parse_weight_policy(value);
        } else if (key == "instances") {
            src.instances = parse_number<std::size_t>(key, value);
        } else if (key == "seed") {
            src.first_seed = parse_number<std::uint64_t>(key, value);
        } else {
            throw std::invalid_argument("unknown generator key '" + std::string(key) + "'");
        }
    }
    if (!have_n) throw std::invalid_argument("generator spec needs n=");
    return src;
}

void validate(const ExperimentConfig& config) {
    if (config.sources.empty()) throw std::invalid_argument("experiment needs at least one graph source");
    if (config.policies.empty()) throw std::invalid_argument("experiment needs at least one scheduler");
    if (config.seeds.empty()) throw std::invalid_argument("experiment needs at least one seed");
    std::set<std::uint64_t> distinct(config.seeds.begin(), config.seeds.end());
    if (distinct.size() != config.seeds.size()) throw std::invalid_argument("seeds must be distinct");
}

std::vector<NamedGraph> materialize(const std::vector<GraphSource>& sources) {
    std::vector<NamedGraph> out;
    for (const auto& source : sources) {
        if (const auto* file = std::get_if<FileSource>(&source)) {
            out.push_back({file->path, read_graph_file(file->path)});
            continue;
        }
        const auto& gen = std::get<GeneratorSource>(source);
        for (std::size_t k = 0; k < gen.instances; ++k) {
            std::uint64_t seed = gen.first_seed + k;
            out.push_back({source_id(gen, seed), generate(gen.spec, seed, gen.weights)});
        }
    }
    return out;
}

bool RunRow::ok() const {
    if (!all_passed(verdicts) || !matches_sequential) return false;
    if (ratio && (Weight(2) * *ratio < Weight(1) || *ratio > Weight(1))) return false;
    return true;
}

RunRow evaluate_run(const std::string& graph_id, const WeightedGraph& g, SchedulerPolicy policy,
                    std::uint64_t seed, bool check, std::size_t oracle_limit) {
    return evaluate_with(graph_id, g, reference_for(g, oracle_limit), policy, seed, check);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    validate(config);
    ExperimentReport report;
    for (const auto& named : materialize(config.sources)) {
        Reference ref = reference_for(named.graph, config.oracle_limit);
        for (auto policy : config.policies) {
            for (auto seed : config.seeds) {
                report.rows.push_back(evaluate_with(named.id, named.graph, ref, policy, seed, config.check));
            }
        }
    }
    report.summary = summarize(report.rows);
    return report;
}

ExperimentSummary summarize(const std::vector<RunRow>& rows) {
    ExperimentSummary s;
    s.runs = rows.size();
    double ratio_sum = 0.0;
    std::size_t ratio_count = 0;
    std::map<std::string, std::set<std::string>> distinct;
    for (const auto& row : rows) {
        if (!row.ok()) ++s.failed;
        if (row.ratio) {
            if (!s.min_ratio || *row.ratio < *s.min_ratio) s.min_ratio = row.ratio;
            ratio_sum += row.ratio->to_double();
            ++ratio_count;
        } else {
            ++s.not_verified;
        }
        if (row.edges > 0) {
            Weight r(static_cast<std::int64_t>(row.stats.messages_total), static_cast<std::int64_t>(2 * row.edges));
            if (!s.max_message_ratio || r > *s.max_message_ratio) s.max_message_ratio = r;
        }
        distinct[row.graph_id].insert(format_matching(row.distributed));
    }
    if (ratio_count > 0) s.mean_ratio = ratio_sum / static_cast<double>(ratio_count);
    for (const auto& [id, set] : distinct) s.max_distinct_matchings = std::max(s.max_distinct_matchings, set.size());
    return s;
}

std::string format_matching(const Matching& m) {
    std::string out;
    for (const auto& e : m.edges) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    }
    return out.empty() ? "{}" : out;
}

void write_report(std::ostream& os, const ExperimentReport& report, OutputFormat format) {
    const auto& s = report.summary;
    auto opt_text = [](const std::optional<Weight>& w) { return w ? w->to_string() : std::string("not_verified"); };

    switch (format) {
    case OutputFormat::csv:
        os << "graph,n,m,scheduler,seed,distributed,sequential,optimal,ratio,messages,req,drop,steps,"
              "matches_sequential,P1,P2,P3,P4,P5,ok\n";
        for (const auto& row : report.rows) {
            os << csv_field(row.graph_id) << ',' << row.vertices << ',' << row.edges << ','
               << to_string(row.policy) << ',' << row.seed << ',' << row.distributed.total_weight << ','
               << row.sequential_weight << ',' << opt_text(row.optimal_weight) << ','
               << (row.ratio ? row.ratio->to_string() : "") << ',' << row.stats.messages_total << ','
               << row.stats.messages_req << ',' << row.stats.messages_drop << ',' << row.stats.steps << ','
               << (row.matches_sequential ? "yes" : "no");
            for (std::size_t p = 0; p < 5; ++p) {
                os << ',' << (row.verdicts.empty() ? "-" : (row.verdicts[p].passed ? "pass" : "fail"));
            }
            os << ',' << (row.ok() ? "yes" : "no") << '\n';
        }
        os << "# runs=" << s.runs << " failed=" << s.failed << " not_verified=" << s.not_verified
           << " min_ratio=" << opt_text(s.min_ratio) << '\n';
        break;
    case OutputFormat::jsonl: {
        for (const auto& row : report.rows) os << row_json(row).dump() << '\n';
        nlohmann::ordered_json sum;
        sum["runs"] = s.runs;
        sum["failed"] = s.failed;
        sum["not_verified"] = s.not_verified;
        sum["min_ratio"] = s.min_ratio ? nlohmann::ordered_json(s.min_ratio->to_string()) : nlohmann::ordered_json(nullptr);
        sum["mean_ratio"] = s.mean_ratio;
        sum["max_message_ratio"] = s.max_message_ratio ? nlohmann::ordered_json(s.max_message_ratio->to_string())
                                                       : nlohmann::ordered_json(nullptr);
        sum["max_distinct_matchings"] = s.max_distinct_matchings;
        os << nlohmann::ordered_json{{"summary", sum}}.dump() << '\n';
        break;
    }
    case OutputFormat::text:
        for (const auto& row : report.rows) {
            os << row.graph_id << " n=" << row.vertices << " m=" << row.edges << " " << to_string(row.policy)
               << "/" << row.seed << "  distributed=" << row.distributed.total_weight
               << " sequential=" << row.sequential_weight << " optimal=" << opt_text(row.optimal_weight);
            if (row.ratio) os << " ratio=" << *row.ratio;
            os << " messages=" << row.stats.messages_total;
            if (!row.verdicts.empty()) os << " checks=" << (all_passed(row.verdicts) ? "pass" : "FAIL");
            if (!row.matches_sequential) os << " MISMATCH";
            os << (row.ok() ? "" : "  <-- failed") << '\n';
        }
        os << "runs: " << s.runs << ", failed: " << s.failed << ", oracle not verified: " << s.not_verified << '\n';
        if (s.min_ratio) {
            std::ostringstream mean;
            mean.precision(6);
            mean << s.mean_ratio;
            os << "ratio min: " << *s.min_ratio << " (" << s.min_ratio->to_double() << "), mean: " << mean.str() << '\n';
        }
        if (s.max_message_ratio) os << "max messages / 2|E|: " << *s.max_message_ratio << '\n';
        os << "max distinct matchings per graph: " << s.max_distinct_matchings << '\n';
        break;
    }
}

} // namespace gmatch
