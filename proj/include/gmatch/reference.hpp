#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch {

/// A set of vertex-disjoint edges, kept sorted by (u, v).
struct Matching {
    std::vector<Edge> edges;
    Weight total_weight;

    bool empty() const { return edges.empty(); }
    std::size_t size() const { return edges.size(); }
    bool contains(NodeId a, NodeId b) const;

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// Canonicalizes, sorts and sums. Does not check disjointness.
Matching make_matching(std::vector<Edge> edges);

/// The neighbor in `live` reached by u's heaviest incident edge, or nullopt
/// when `live` is empty. Throws std::invalid_argument if `live` holds a
/// vertex that is not adjacent to u.
std::optional<NodeId> candidate(const WeightedGraph& g, NodeId u, const NodeSet& live);

/// Which locally heaviest edge the sequential algorithm takes each round.
/// With a strict total edge order both rules return the same matching.
enum class GreedyRule {
    first_locally_heaviest,
    last_locally_heaviest,
};

/// Repeatedly takes a locally heaviest remaining edge and removes it together
/// with all edges incident to it.
Matching sequential_greedy(const WeightedGraph& g, GreedyRule rule = GreedyRule::first_locally_heaviest);

inline constexpr std::size_t kDefaultOracleLimit = 20;
/// Largest vertex count the oracle accepts regardless of the configured limit.
inline constexpr std::size_t kOracleHardLimit = 24;

class OracleLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Exact maximum-weight matching by dynamic programming over vertex subsets.
/// O(2^n * n) time and memory; throws OracleLimitError when
/// |V| > min(vertex_limit, kOracleHardLimit).
Matching optimal_matching(const WeightedGraph& g, std::size_t vertex_limit = kDefaultOracleLimit);

bool is_valid_matching(const WeightedGraph& g, const Matching& m);

/// Sum of the edge weights, recomputed from the edges themselves.
Weight matching_weight(const Matching& m);

} // namespace gmatch
