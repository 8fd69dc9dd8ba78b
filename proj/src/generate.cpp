#include "gmatch/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace gmatch {

namespace {

using Pairs = std::vector<std::pair<NodeId, NodeId>>;

Pairs structure(const GraphSpec& spec, std::mt19937_64& rng) {
    const auto n = static_cast<NodeId>(spec.n);
    Pairs out;
    switch (spec.kind) {
    case GraphKind::path:
        for (NodeId i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
        break;
    case GraphKind::cycle:
        if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        for (NodeId i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
        out.emplace_back(n - 1, 0);
        break;
    case GraphKind::star:
        for (NodeId i = 1; i < n; ++i) out.emplace_back(0, i);
        break;
    case GraphKind::complete:
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j) out.emplace_back(i, j);
        break;
    case GraphKind::random_gnp: {
        std::bernoulli_distribution coin(spec.p);
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j)
                if (coin(rng)) out.emplace_back(i, j);
        break;
    }
    case GraphKind::random_tree: {
        std::vector<NodeId> label(n);
        std::iota(label.begin(), label.end(), NodeId{0});
        std::shuffle(label.begin(), label.end(), rng);
        for (NodeId i = 1; i < n; ++i) {
            std::uniform_int_distribution<NodeId> parent(0, i - 1);
            out.emplace_back(label[parent(rng)], label[i]);
        }
        break;
    }
    case GraphKind::bipartite: {
        if (spec.left > spec.n) throw std::invalid_argument("bipartite left side larger than n");
        const auto left = static_cast<NodeId>(spec.left);
        std::bernoulli_distribution coin(spec.p);
        for (NodeId i = 0; i < left; ++i)
            for (NodeId j = left; j < n; ++j)
                if (coin(rng)) out.emplace_back(i, j);
        break;
    }
    }
    return out;
}

std::vector<Weight> draw_weights(const WeightPolicy& policy, std::size_t m, std::mt19937_64& rng) {
    std::vector<Weight> out;
    out.reserve(m);
    switch (policy.kind) {
    case WeightPolicyKind::distinct_random: {
        // m distinct values sampled from a pool four times larger than needed.
        std::vector<std::int64_t> pool(4 * m);
        std::iota(pool.begin(), pool.end(), std::int64_t{1});
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t i = 0; i < m; ++i) out.emplace_back(pool[i]);
        break;
    }
    case WeightPolicyKind::uniform_random: {
        if (policy.max_weight < 1) throw std::invalid_argument("max weight must be positive");
        std::uniform_int_distribution<std::int64_t> draw(1, policy.max_weight);
        for (std::size_t i = 0; i < m; ++i) out.emplace_back(draw(rng));
        break;
    }
    case WeightPolicyKind::all_equal:
        if (policy.base < 1) throw std::invalid_argument("weight must be positive");
        out.assign(m, Weight(policy.base));
        break;
    case WeightPolicyKind::adversarial_half_ratio:
        if (policy.base < 1) throw std::invalid_argument("weight must be positive");
        for (std::size_t i = 0; i < m; ++i) out.emplace_back(i % 3 == 1 ? policy.base + 1 : policy.base);
        break;
    case WeightPolicyKind::explicit_list:
        if (policy.values.size() != m) {
            throw std::invalid_argument("expected " + std::to_string(m) + " weights, got " +
                                        std::to_string(policy.values.size()));
        }
        out = policy.values;
        break;
    }
    return out;
}

} // namespace

WeightedGraph generate(const GraphSpec& spec, std::uint64_t seed, const WeightPolicy& weights) {
    if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("edge probability outside [0,1]");
    if (spec.n > std::numeric_limits<NodeId>::max()) throw std::invalid_argument("too many vertices");
    std::mt19937_64 rng(seed);
    Pairs pairs = structure(spec, rng);
    std::vector<Weight> w = draw_weights(weights, pairs.size(), rng);
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        edges.push_back(make_edge(pairs[i].first, pairs[i].second, w[i]));
    }
    // Explicit weights may still be non-positive; the constructor reports that.
    return WeightedGraph(spec.n, std::move(edges));
}

GraphKind parse_graph_kind(std::string_view name) {
    if (name == "path") return GraphKind::path;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "star") return GraphKind::star;
    if (name == "complete") return GraphKind::complete;
    if (name == "random_gnp" || name == "gnp") return GraphKind::random_gnp;
    if (name == "random_tree" || name == "tree") return GraphKind::random_tree;
    if (name == "bipartite") return GraphKind::bipartite;
    throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

const char* to_string(GraphKind kind) {
    switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::star: return "star";
    case GraphKind::complete: return "complete";
    case GraphKind::random_gnp: return "random_gnp";
    case GraphKind::random_tree: return "random_tree";
    case GraphKind::bipartite: return "bipartite";
    }
    return "?";
}

WeightPolicy parse_weight_policy(std::string_view text) {
    if (text == "distinct" || text == "distinct_random") return WeightPolicy::distinct();
    if (text == "uniform" || text == "uniform_random") return WeightPolicy::uniform(10);
    if (text == "equal" || text == "all_equal") return WeightPolicy::equal(1);
    if (text == "adversarial" || text == "adversarial_half_ratio") return WeightPolicy::adversarial(1000);
    std::vector<Weight> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        values.push_back(Weight::parse(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return WeightPolicy::explicit_weights(std::move(values));
}

std::string to_string(const WeightPolicy& policy) {
    switch (policy.kind) {
    case WeightPolicyKind::distinct_random: return "distinct";
    case WeightPolicyKind::uniform_random: return "uniform(" + std::to_string(policy.max_weight) + ")";
    case WeightPolicyKind::all_equal: return "equal(" + std::to_string(policy.base) + ")";
    case WeightPolicyKind::adversarial_half_ratio: return "adversarial(" + std::to_string(policy.base) + ")";
    case WeightPolicyKind::explicit_list: {
        std::string out;
        for (const auto& w : policy.values) {
            if (!out.empty()) out += ',';
            out += w.to_string();
        }
        return out;
    }
    }
    return "?";
}

} // namespace gmatch
