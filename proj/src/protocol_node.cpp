#include "gmatch/protocol_node.hpp"

#include "gmatch/reference.hpp"

namespace gmatch {

const char* to_string(MessageKind kind) {
    return kind == MessageKind::req ? "req" : "drop";
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::delivery_to_terminated: return "delivery to terminated node";
    case ViolationKind::sender_not_neighbor: return "sender is not a neighbor";
    case ViolationKind::duplicate_send: return "second message over the same directed edge";
    case ViolationKind::asymmetric_partners: return "asymmetric partners";
    case ViolationKind::nontermination: return "nontermination";
    case ViolationKind::unterminated_node: return "node not terminated";
    }
    return "protocol violation";
}

namespace {

// Match check run at the end of every step.
void try_match(Transition& t) {
    NodeState& s = t.state;
    if (!s.candidate || !s.requests.contains(*s.candidate)) return;
    for (NodeId w : s.live) {
        if (w != *s.candidate) t.sends.push_back({w, {MessageKind::drop, s.me}});
    }
    s.live.clear();
    s.terminated = true;
    s.partner = s.candidate;
    t.match = MatchEvent{s.me, *s.candidate};
}

} // namespace

Transition init_node(const WeightedGraph& g, NodeId me) {
    Transition t;
    t.state.me = me;
    t.state.live = g.neighbors(me);
    t.state.candidate = candidate(g, me, t.state.live);
    if (t.state.candidate) t.sends.push_back({*t.state.candidate, {MessageKind::req, me}});
    t.state.terminated = t.state.live.empty();
    return t;
}

Transition on_receive(const WeightedGraph& g, NodeState state, const Message& m) {
    if (state.terminated) {
        throw ProtocolViolation(ViolationKind::delivery_to_terminated,
                                std::string(to_string(m.kind)) + " from " + std::to_string(m.sender) +
                                    " to " + std::to_string(state.me));
    }
    if (!g.find_edge(state.me, m.sender)) {
        throw ProtocolViolation(ViolationKind::sender_not_neighbor,
                                std::to_string(m.sender) + " -> " + std::to_string(state.me));
    }

    Transition t{std::move(state), {}, std::nullopt};
    NodeState& s = t.state;
    if (m.kind == MessageKind::req) {
        s.requests.insert(m.sender);
    } else {
        s.live.erase(m.sender);
        if (s.candidate == m.sender) {
            s.candidate = candidate(g, s.me, s.live);
            if (s.candidate) t.sends.push_back({*s.candidate, {MessageKind::req, s.me}});
        }
    }
    try_match(t);
    if (s.live.empty()) s.terminated = true;
    return t;
}

} // namespace gmatch
