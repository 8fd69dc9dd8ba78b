#include "gmatch/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace gmatch {

Edge make_edge(NodeId a, NodeId b, Weight w) {
    return a < b ? Edge{a, b, w} : Edge{b, a, w};
}

bool EdgeOrderKey::precedes(const EdgeOrderKey& other) const {
    if (w != other.w) return w > other.w;
    if (lo != other.lo) return lo < other.lo;
    return hi < other.hi;
}

EdgeOrderKey order_key(const Edge& e) {
    return {e.w, std::min(e.u, e.v), std::max(e.u, e.v)};
}

bool heavier(const Edge& a, const Edge& b) {
    return order_key(a).precedes(order_key(b));
}

const char* to_string(GraphErrc code) {
    switch (code) {
    case GraphErrc::self_loop: return "self-loop";
    case GraphErrc::duplicate_edge: return "duplicate edge";
    case GraphErrc::non_positive_weight: return "non-positive weight";
    case GraphErrc::endpoint_out_of_range: return "endpoint out of range";
    }
    return "unknown graph error";
}

namespace {

[[noreturn]] void fail(GraphErrc code, const Edge& e) {
    throw GraphError(code, std::string(to_string(code)) + " (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + "," + e.w.to_string() + ")");
}

} // namespace

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u == e.v) fail(GraphErrc::self_loop, e);
        if (e.u >= vertex_count_ || e.v >= vertex_count_) fail(GraphErrc::endpoint_out_of_range, e);
        if (!e.w.is_positive()) fail(GraphErrc::non_positive_weight, e);
        e = make_edge(e.u, e.v, e.w);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
            fail(GraphErrc::duplicate_edge, edges_[i]);
        }
    }

    adjacency_.resize(vertex_count_);
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        adjacency_[edges_[i].u].push_back({edges_[i].v, i});
        adjacency_[edges_[i].v].push_back({edges_[i].u, i});
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(),
                  [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }

    by_weight_.resize(edges_.size());
    std::iota(by_weight_.begin(), by_weight_.end(), EdgeIndex{0});
    std::sort(by_weight_.begin(), by_weight_.end(),
              [this](EdgeIndex a, EdgeIndex b) { return gmatch::heavier(edges_[a], edges_[b]); });
    rank_.resize(edges_.size());
    for (std::size_t r = 0; r < by_weight_.size(); ++r) rank_[by_weight_[r]] = r;
}

NodeSet WeightedGraph::neighbors(NodeId v) const {
    NodeSet out;
    for (const auto& inc : incident(v)) out.insert(out.end(), inc.neighbor);
    return out;
}

std::optional<EdgeIndex> WeightedGraph::find_edge(NodeId a, NodeId b) const {
    if (a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
    const auto& list = adjacency_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Incidence& inc, NodeId id) { return inc.neighbor < id; });
    if (it == list.end() || it->neighbor != b) return std::nullopt;
    return it->edge;
}

WeightedGraph new_graph(std::size_t vertex_count, std::vector<Edge> edges) {
    return WeightedGraph(vertex_count, std::move(edges));
}

} // namespace gmatch
