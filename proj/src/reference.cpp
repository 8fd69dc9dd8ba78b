#include "gmatch/reference.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>

namespace gmatch {

bool Matching::contains(NodeId a, NodeId b) const {
    Edge key = make_edge(a, b, Weight{});
    return std::any_of(edges.begin(), edges.end(),
                       [&](const Edge& e) { return e.u == key.u && e.v == key.v; });
}

Matching make_matching(std::vector<Edge> edges) {
    Matching m;
    for (auto& e : edges) e = make_edge(e.u, e.v, e.w);
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    m.edges = std::move(edges);
    m.total_weight = matching_weight(m);
    return m;
}

std::optional<NodeId> candidate(const WeightedGraph& g, NodeId u, const NodeSet& live) {
    std::optional<NodeId> best;
    std::optional<EdgeIndex> best_edge;
    for (NodeId v : live) {
        auto e = g.find_edge(u, v);
        if (!e) {
            throw std::invalid_argument("candidate: " + std::to_string(v) + " is not a neighbor of " +
                                        std::to_string(u));
        }
        if (!best_edge || g.heavier(*e, *best_edge)) {
            best = v;
            best_edge = e;
        }
    }
    return best;
}

Matching sequential_greedy(const WeightedGraph& g, GreedyRule rule) {
    constexpr auto none = std::numeric_limits<EdgeIndex>::max();
    std::vector<bool> alive(g.edge_count(), true);
    std::vector<bool> matched(g.vertex_count(), false);
    std::size_t remaining = g.edge_count();
    std::vector<Edge> chosen;

    while (remaining > 0) {
        // Heaviest remaining incident edge per vertex; an edge is locally
        // heaviest iff it is that edge at both of its endpoints.
        std::vector<EdgeIndex> top(g.vertex_count(), none);
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            if (!alive[e]) continue;
            for (NodeId x : {g.edge(e).u, g.edge(e).v}) {
                if (top[x] == none || g.heavier(e, top[x])) top[x] = e;
            }
        }
        EdgeIndex pick = none;
        for (EdgeIndex e : g.by_weight()) {
            if (!alive[e] || top[g.edge(e).u] != e || top[g.edge(e).v] != e) continue;
            pick = e;
            if (rule == GreedyRule::first_locally_heaviest) break;
        }

        const Edge& taken = g.edge(pick);
        chosen.push_back(taken);
        matched[taken.u] = matched[taken.v] = true;
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            if (alive[e] && (matched[g.edge(e).u] || matched[g.edge(e).v])) {
                alive[e] = false;
                --remaining;
            }
        }
    }
    return make_matching(std::move(chosen));
}

Matching optimal_matching(const WeightedGraph& g, std::size_t vertex_limit) {
    const std::size_t n = g.vertex_count();
    if (n > std::min(vertex_limit, kOracleHardLimit)) {
        throw OracleLimitError("exact matching limited to " +
                               std::to_string(std::min(vertex_limit, kOracleHardLimit)) +
                               " vertices, graph has " + std::to_string(n));
    }
    if (n == 0) return {};

    // best[S] is the maximum matching weight inside vertex subset S. The lowest
    // vertex i of S is either left unmatched or paired with a neighbor j in S.
    const std::size_t states = std::size_t{1} << n;
    std::vector<Weight> best(states);
    std::vector<std::int8_t> partner(states, -1);
    for (std::size_t s = 1; s < states; ++s) {
        auto i = static_cast<NodeId>(std::countr_zero(s));
        std::size_t rest = s & (s - 1);
        best[s] = best[rest];
        for (const auto& inc : g.incident(i)) {
            std::size_t bit = std::size_t{1} << inc.neighbor;
            if (!(rest & bit)) continue;
            Weight w = g.edge(inc.edge).w + best[rest & ~bit];
            if (w > best[s]) {
                best[s] = w;
                partner[s] = static_cast<std::int8_t>(inc.neighbor);
            }
        }
    }

    std::vector<Edge> chosen;
    std::size_t s = states - 1;
    while (s != 0) {
        auto i = static_cast<NodeId>(std::countr_zero(s));
        std::size_t rest = s & (s - 1);
        if (partner[s] < 0) {
            s = rest;
            continue;
        }
        auto j = static_cast<NodeId>(partner[s]);
        chosen.push_back(g.edge(*g.find_edge(i, j)));
        s = rest & ~(std::size_t{1} << j);
    }
    return make_matching(std::move(chosen));
}

bool is_valid_matching(const WeightedGraph& g, const Matching& m) {
    std::vector<bool> used(g.vertex_count(), false);
    for (const auto& e : m.edges) {
        auto idx = g.find_edge(e.u, e.v);
        if (!idx || g.edge(*idx).w != e.w) return false;
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = true;
    }
    return true;
}

Weight matching_weight(const Matching& m) {
    Weight total;
    for (const auto& e : m.edges) total += e.w;
    return total;
}

} // namespace gmatch
