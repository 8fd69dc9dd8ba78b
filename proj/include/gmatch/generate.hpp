#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch {

enum class GraphKind { path, cycle, star, complete, random_gnp, random_tree, bipartite };

struct GraphSpec {
    GraphKind kind = GraphKind::path;
    std::size_t n = 0;
    /// Edge probability for random_gnp and bipartite.
    double p = 0.5;
    /// Size of the left side for bipartite; the right side gets n - left.
    std::size_t left = 0;
};

enum class WeightPolicyKind {
    distinct_random,
    uniform_random,
    all_equal,
    /// Repeats the pattern (w, w+1, w) over the edges in generation order. On
    /// a 4-vertex path this is the instance where greedy gets (w+1)/(2w).
    adversarial_half_ratio,
    explicit_list,
};

struct WeightPolicy {
    WeightPolicyKind kind = WeightPolicyKind::distinct_random;
    /// The repeated weight for all_equal and the `w` of adversarial_half_ratio.
    std::int64_t base = 1000;
    /// Upper bound for uniform_random weights, drawn from [1, max_weight].
    std::int64_t max_weight = 10;
    /// Weights for explicit_list, in generation order; size must equal |E|.
    std::vector<Weight> values;

    static WeightPolicy distinct() { return {WeightPolicyKind::distinct_random, 1000, 10, {}}; }
    static WeightPolicy uniform(std::int64_t max_weight) {
        return {WeightPolicyKind::uniform_random, 1000, max_weight, {}};
    }
    static WeightPolicy equal(std::int64_t value) { return {WeightPolicyKind::all_equal, value, 10, {}}; }
    static WeightPolicy adversarial(std::int64_t w) {
        return {WeightPolicyKind::adversarial_half_ratio, w, 10, {}};
    }
    static WeightPolicy explicit_weights(std::vector<Weight> values) {
        return {WeightPolicyKind::explicit_list, 1000, 10, std::move(values)};
    }
};

/// Deterministic for a fixed (spec, seed, weights). Throws
/// std::invalid_argument on invalid parameters.
///
/// Edge generation order (which explicit and adversarial weights follow):
///   path      (0,1), (1,2), ...
///   cycle     path order, then (n-1,0); needs n >= 3
///   star      (0,1), (0,2), ...  with center 0
///   complete  lexicographic pairs
///   random_*  order in which the generator emits them
WeightedGraph generate(const GraphSpec& spec, std::uint64_t seed, const WeightPolicy& weights);

GraphKind parse_graph_kind(std::string_view name);
const char* to_string(GraphKind kind);

/// "distinct", "uniform", "equal", "adversarial" (long names also accepted),
/// or a comma separated weight list such as "2,3,2".
WeightPolicy parse_weight_policy(std::string_view text);
std::string to_string(const WeightPolicy& policy);

} // namespace gmatch
