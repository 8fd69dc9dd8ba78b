#include <doctest.h>

#include "gmatch/protocol_node.hpp"

using namespace gmatch;

namespace {

// Node 0 with neighbors 1 (w=5), 2 (w=3), 3 (w=2); node 4 is isolated.
WeightedGraph fan() { return new_graph(5, {{0, 1, 5}, {0, 2, 3}, {0, 3, 2}}); }

NodeState state(NodeId me, NodeSet requests, NodeSet live, std::optional<NodeId> c) {
    NodeState s;
    s.me = me;
    s.requests = std::move(requests);
    s.live = std::move(live);
    s.candidate = c;
    return s;
}

Message req(NodeId from) { return {MessageKind::req, from}; }
Message drop(NodeId from) { return {MessageKind::drop, from}; }

} // namespace

TEST_CASE("init sends one req to the candidate") {
    auto g = fan();
    auto t = init_node(g, 0);
    CHECK(t.state.live == NodeSet{1, 2, 3});
    CHECK(t.state.requests.empty());
    CHECK(t.state.candidate == NodeId{1});
    CHECK_FALSE(t.state.terminated);
    CHECK(t.sends == std::vector<Outbound>{{1, req(0)}});
    CHECK_FALSE(t.match);

    auto leaf = init_node(g, 3);
    CHECK(leaf.sends == std::vector<Outbound>{{0, req(3)}});
}

TEST_CASE("isolated node terminates at wake-up") {
    auto t = init_node(fan(), 4);
    CHECK(t.state.terminated);
    CHECK(t.sends.empty());
    CHECK(t.state.partner == std::nullopt);
    CHECK(t.state.candidate == std::nullopt);
}

TEST_CASE("req from the candidate matches and drops the rest") {
    auto t = on_receive(fan(), state(0, {}, {1, 2, 3}, 1), req(1));
    REQUIRE(t.match);
    CHECK(*t.match == MatchEvent{0, 1});
    CHECK(t.sends == std::vector<Outbound>{{2, drop(0)}, {3, drop(0)}});
    CHECK(t.state.live.empty());
    CHECK(t.state.terminated);
    CHECK(t.state.partner == NodeId{1});
}

TEST_CASE("req from a non-candidate is only recorded") {
    auto t = on_receive(fan(), state(0, {}, {1, 2, 3}, 1), req(2));
    CHECK(t.state.requests == NodeSet{2});
    CHECK(t.sends.empty());
    CHECK_FALSE(t.match);
    CHECK_FALSE(t.state.terminated);
}

TEST_CASE("drop from the candidate moves the request on") {
    auto t = on_receive(fan(), state(0, {}, {1, 2}, 1), drop(1));
    CHECK(t.state.live == NodeSet{2});
    CHECK(t.state.candidate == NodeId{2});
    CHECK(t.sends == std::vector<Outbound>{{2, req(0)}});
    CHECK_FALSE(t.match);
}

TEST_CASE("drop from another neighbor leaves the candidate") {
    auto t = on_receive(fan(), state(0, {}, {1, 2}, 1), drop(2));
    CHECK(t.state.live == NodeSet{1});
    CHECK(t.state.candidate == NodeId{1});
    CHECK(t.sends.empty());
}

TEST_CASE("new candidate that already requested matches immediately") {
    auto t = on_receive(fan(), state(0, {2}, {1, 2}, 1), drop(1));
    REQUIRE(t.match);
    CHECK(*t.match == MatchEvent{0, 2});
    // The req to the new candidate still goes out; no one is left to drop.
    CHECK(t.sends == std::vector<Outbound>{{2, req(0)}});
    CHECK(t.state.partner == NodeId{2});
    CHECK(t.state.terminated);
}

TEST_CASE("losing the last neighbor terminates unmatched") {
    auto t = on_receive(fan(), state(0, {}, {1}, 1), drop(1));
    CHECK(t.state.terminated);
    CHECK(t.state.candidate == std::nullopt);
    CHECK(t.state.partner == std::nullopt);
    CHECK(t.sends.empty());
}

TEST_CASE("protocol violations") {
    auto done = state(0, {}, {}, std::nullopt);
    done.terminated = true;
    try {
        on_receive(fan(), done, req(1));
        FAIL("expected ProtocolViolation");
    } catch (const ProtocolViolation& e) {
        CHECK(e.kind() == ViolationKind::delivery_to_terminated);
    }
    try {
        on_receive(fan(), state(1, {}, {0}, 0), req(2));
        FAIL("expected ProtocolViolation");
    } catch (const ProtocolViolation& e) {
        CHECK(e.kind() == ViolationKind::sender_not_neighbor);
    }
}

TEST_CASE("transitions are pure") {
    auto g = fan();
    auto s = state(0, {3}, {1, 2, 3}, 1);
    for (auto m : {req(1), req(2), drop(1), drop(2), drop(3)}) {
        auto a = on_receive(g, s, m);
        auto b = on_receive(g, s, m);
        CHECK(a.state == b.state);
        CHECK(a.sends == b.sends);
        CHECK(a.match == b.match);
    }
}
