#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmatch/graph.hpp"

namespace gmatch {

enum class MessageKind { req, drop };

const char* to_string(MessageKind kind);

struct Message {
    MessageKind kind = MessageKind::req;
    NodeId sender = 0;

    friend bool operator==(const Message&, const Message&) = default;
};

struct Outbound {
    NodeId dst = 0;
    Message msg;

    friend bool operator==(const Outbound&, const Outbound&) = default;
};

/// Local state of one node running the distributed greedy protocol.
struct NodeState {
    NodeId me = 0;
    NodeSet requests;  ///< neighbors a req has been received from
    NodeSet live;      ///< neighbors still reachable over non-dropped edges
    std::optional<NodeId> candidate;
    bool terminated = false;
    std::optional<NodeId> partner;

    friend bool operator==(const NodeState&, const NodeState&) = default;
};

/// Reported by a node at the moment it commits to an edge.
struct MatchEvent {
    NodeId node = 0;
    NodeId partner = 0;

    friend bool operator==(const MatchEvent&, const MatchEvent&) = default;
};

struct Transition {
    NodeState state;
    std::vector<Outbound> sends;
    std::optional<MatchEvent> match;
};

enum class ViolationKind {
    delivery_to_terminated,
    sender_not_neighbor,
    duplicate_send,
    asymmetric_partners,
    nontermination,
    unterminated_node,
};

const char* to_string(ViolationKind kind);

/// A run broke an invariant the protocol guarantees. Always an
/// implementation bug, never a legitimate outcome.
class ProtocolViolation : public std::logic_error {
public:
    ProtocolViolation(ViolationKind kind, const std::string& what)
        : std::logic_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ViolationKind kind() const noexcept { return kind_; }

private:
    ViolationKind kind_;
};

/// Wake-up step: live = all neighbors, pick the candidate, send it a req.
/// An isolated node comes back already terminated and unmatched.
Transition init_node(const WeightedGraph& g, NodeId me);

/// Handles one delivered message. Pure: the result depends only on the
/// arguments.
///
/// A req adds the sender to `requests`. A drop removes the sender from `live`;
/// if it was the candidate a new one is chosen and, if any, sent a req. Then,
/// if the candidate has also requested us, every other live neighbor gets a
/// drop and the node terminates matched. A node whose live set empties
/// without matching terminates unmatched.
Transition on_receive(const WeightedGraph& g, NodeState state, const Message& m);

} // namespace gmatch
