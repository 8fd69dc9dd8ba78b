#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "gmatch/graph.hpp"
#include "gmatch/protocol_node.hpp"
#include "gmatch/reference.hpp"
#include "gmatch/trace.hpp"

namespace gmatch {

struct InFlight {
    NodeId src = 0;
    NodeId dst = 0;
    Message msg;
    std::uint64_t send_step = 0;
};

enum class SchedulerPolicy { random, fifo, lifo, adversarial_heavy_last };

const char* to_string(SchedulerPolicy policy);
/// Accepts "random", "fifo", "lifo", "adversarial" / "adversarial_heavy_last".
SchedulerPolicy parse_scheduler_policy(std::string_view name);

/// Chooses which in-flight message is delivered next.
///
///   random       uniform over the pool, from a generator seeded with `seed`
///   fifo         oldest send first
///   lifo         newest send first
///   adversarial  message on the lightest edge first, so traffic on heavy
///                edges is held back as long as possible (ties: oldest)
class Scheduler {
public:
    explicit Scheduler(SchedulerPolicy policy = SchedulerPolicy::fifo, std::uint64_t seed = 0)
        : policy_(policy), seed_(seed), rng_(seed) {}

    SchedulerPolicy policy() const { return policy_; }
    std::uint64_t seed() const { return seed_; }

    /// Index into `pool`, which is in send order and never empty.
    std::size_t pick(std::span<const InFlight> pool, const WeightedGraph& g);

private:
    SchedulerPolicy policy_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

struct SimOptions {
    /// Snapshot live sets after every delivery instead of only at wake-up,
    /// after each match event and at the end.
    bool snapshot_every_step = false;
};

struct RunStats {
    std::size_t messages_total = 0;
    std::size_t messages_req = 0;
    std::size_t messages_drop = 0;
    /// Messages that reached a node after it terminated. They are absorbed
    /// unread: a terminated node has left its receive loop.
    std::size_t messages_discarded = 0;
    std::size_t matched_pairs = 0;
    Weight matching_weight;
    std::uint64_t steps = 0;  ///< deliveries
};

struct SimulationResult {
    Matching matching;
    Trace trace;
    RunStats stats;
    std::vector<NodeState> final_states;
};

/// Runs the protocol on every node of `g` until no message is in flight.
///
/// A message whose destination has already terminated is recorded as a
/// discard and not handed to the node. Throws ProtocolViolation if a node
/// sends twice over the same directed edge, more than 2|E| deliveries happen,
/// a node is left unterminated, or partners disagree.
SimulationResult simulate(const WeightedGraph& g, Scheduler scheduler, SimOptions options = {});

/// {(v, partner_v)} over the final states; checks the pairing is symmetric.
Matching extract_matching(const WeightedGraph& g, std::span<const NodeState> states);

} // namespace gmatch
