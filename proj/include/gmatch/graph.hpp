#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "gmatch/weight.hpp"

namespace gmatch {

using NodeId = std::uint32_t;
using EdgeIndex = std::size_t;
using NodeSet = std::set<NodeId>;

/// Undirected weighted edge, canonical when u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    Weight w;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Builds the canonical form (smaller endpoint first).
Edge make_edge(NodeId a, NodeId b, Weight w);

/// Position of an edge in the global total order: heavier weight first, then
/// smaller low endpoint, then smaller high endpoint. Two distinct edges of a
/// simple graph never compare equal.
struct EdgeOrderKey {
    Weight w;
    NodeId lo = 0;
    NodeId hi = 0;

    /// True iff this key comes strictly before `other` (i.e. is heavier).
    bool precedes(const EdgeOrderKey& other) const;
};

EdgeOrderKey order_key(const Edge& e);

/// True iff `a` is heavier than `b` under the edge order. Expects a != b.
bool heavier(const Edge& a, const Edge& b);

enum class GraphErrc {
    self_loop,
    duplicate_edge,
    non_positive_weight,
    endpoint_out_of_range,
};

const char* to_string(GraphErrc code);

class GraphError : public std::invalid_argument {
public:
    GraphError(GraphErrc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    GraphErrc code() const noexcept { return code_; }

private:
    GraphErrc code_;
};

struct Incidence {
    NodeId neighbor = 0;
    EdgeIndex edge = 0;
};

/// Simple undirected graph with strictly positive exact weights.
///
/// Edges are stored canonically and sorted by (u, v), so two graphs with the
/// same vertex count and edge set compare equal regardless of input order.
/// Each edge also carries its rank in the global edge order (0 = heaviest),
/// which is what every "locally heaviest" decision in the library consults.
/// Immutable once built.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validating constructor. Throws GraphError on self-loops, parallel
    /// edges, non-positive weights or out-of-range endpoints.
    WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

    /// Incident edges of `v`, ordered by neighbor id.
    std::span<const Incidence> incident(NodeId v) const { return adjacency_.at(v); }
    std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
    NodeSet neighbors(NodeId v) const;

    std::optional<EdgeIndex> find_edge(NodeId a, NodeId b) const;

    /// Rank in the global edge order, 0 for the heaviest edge.
    std::size_t rank(EdgeIndex e) const { return rank_.at(e); }
    bool heavier(EdgeIndex a, EdgeIndex b) const { return rank_.at(a) < rank_.at(b); }

    /// Edge indices from heaviest to lightest.
    std::span<const EdgeIndex> by_weight() const { return by_weight_; }

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<std::size_t> rank_;
    std::vector<EdgeIndex> by_weight_;
};

/// Free-function spelling of the validating constructor.
WeightedGraph new_graph(std::size_t vertex_count, std::vector<Edge> edges);

} // namespace gmatch
