#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmatch/graph.hpp"
#include "gmatch/protocol_node.hpp"

namespace gmatch {

enum class TraceEventKind { send, deliver, discard, match, terminate };

const char* to_string(TraceEventKind kind);

/// One line of a run's history.
///
///   send / deliver   src -> dst carrying `message`
///   discard          src -> dst arrived after dst left its receive loop
///   match            src < dst are the matched pair, `match_index` is i
///   terminate        src is the node, dst its partner (empty if unmatched)
///
/// `step` is the number of deliveries completed when the event happened;
/// everything done during wake-up has step 0.
struct TraceEvent {
    std::uint64_t step = 0;
    TraceEventKind kind = TraceEventKind::send;
    NodeId src = 0;
    std::optional<NodeId> dst;
    std::optional<MessageKind> message;
    std::optional<std::size_t> match_index;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Matching event x_i: the first time either endpoint commits to the pair.
struct MatchEventRecord {
    std::size_t index = 0;  ///< 1-based, in order of occurrence
    NodeId u = 0;           ///< u < v
    NodeId v = 0;
    EdgeIndex edge = 0;
    std::uint64_t step = 0;

    friend bool operator==(const MatchEventRecord&, const MatchEventRecord&) = default;
};

/// Every node's live set at a point between match events x_i and x_{i+1}.
struct LiveSetSnapshot {
    std::uint64_t step = 0;
    std::size_t after_match = 0;  ///< i; 0 means before any match
    std::vector<NodeSet> live;

    friend bool operator==(const LiveSetSnapshot&, const LiveSetSnapshot&) = default;
};

struct Trace {
    std::size_t vertex_count = 0;
    std::vector<TraceEvent> events;
    std::vector<MatchEventRecord> matches;
    std::vector<LiveSetSnapshot> snapshots;

    friend bool operator==(const Trace&, const Trace&) = default;
};

/// residual_sets(g, t)[i][e] tells whether edge e is still in E_i, for
/// i = 0 .. t.matches.size(). E_0 = E and E_i drops every edge incident to
/// either endpoint of match i.
std::vector<std::vector<bool>> residual_sets(const WeightedGraph& g, const Trace& trace);

enum class Proposition {
    one_message_per_edge,   ///< P1
    live_sets_cover_edges,  ///< P2
    match_edge_remains,     ///< P3
    termination,            ///< P4
    locally_heaviest,       ///< P5
};

const char* to_string(Proposition p);   ///< "P1" .. "P5"
const char* describe(Proposition p);

struct Verdict {
    Proposition proposition = Proposition::one_message_per_edge;
    bool passed = true;
    std::string detail;  ///< first counterexample when failed
};

/// Trace does not belong to the graph it is checked against.
class TraceMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluates P1..P5 on a recorded run, in that order.
std::vector<Verdict> check_trace(const WeightedGraph& g, const Trace& trace);

bool all_passed(const std::vector<Verdict>& verdicts);

/// Line-delimited JSON, one event per line with the fields
/// step, kind, src, dst, payload. See docs/trace_format.md.
void write_trace_jsonl(std::ostream& os, const WeightedGraph& g, const Trace& trace);

} // namespace gmatch
