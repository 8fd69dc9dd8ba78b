#include "gmatch/net_sim.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace gmatch {

const char* to_string(SchedulerPolicy policy) {
    switch (policy) {
    case SchedulerPolicy::random: return "random";
    case SchedulerPolicy::fifo: return "fifo";
    case SchedulerPolicy::lifo: return "lifo";
    case SchedulerPolicy::adversarial_heavy_last: return "adversarial";
    }
    return "?";
}

SchedulerPolicy parse_scheduler_policy(std::string_view name) {
    if (name == "random") return SchedulerPolicy::random;
    if (name == "fifo") return SchedulerPolicy::fifo;
    if (name == "lifo") return SchedulerPolicy::lifo;
    if (name == "adversarial" || name == "adversarial_heavy_last") return SchedulerPolicy::adversarial_heavy_last;
    throw std::invalid_argument("unknown scheduler '" + std::string(name) + "'");
}

std::size_t Scheduler::pick(std::span<const InFlight> pool, const WeightedGraph& g) {
    switch (policy_) {
    case SchedulerPolicy::random: {
        std::uniform_int_distribution<std::size_t> draw(0, pool.size() - 1);
        return draw(rng_);
    }
    case SchedulerPolicy::fifo:
        return 0;
    case SchedulerPolicy::lifo:
        return pool.size() - 1;
    case SchedulerPolicy::adversarial_heavy_last: {
        std::size_t best = 0;
        std::size_t best_rank = g.rank(*g.find_edge(pool[0].src, pool[0].dst));
        for (std::size_t i = 1; i < pool.size(); ++i) {
            std::size_t r = g.rank(*g.find_edge(pool[i].src, pool[i].dst));
            if (r > best_rank) {
                best = i;
                best_rank = r;
            }
        }
        return best;
    }
    }
    return 0;
}

namespace {

class Run {
public:
    Run(const WeightedGraph& g, Scheduler scheduler, SimOptions options)
        : g_(g), scheduler_(std::move(scheduler)), options_(options), states_(g.vertex_count()) {
        trace_.vertex_count = g.vertex_count();
    }

    SimulationResult execute() {
        for (NodeId v = 0; v < g_.vertex_count(); ++v) apply(init_node(g_, v));
        snapshot();

        const std::size_t bound = 2 * g_.edge_count();
        while (!pool_.empty()) {
            if (step_ == bound) {
                throw ProtocolViolation(ViolationKind::nontermination,
                                        "more than " + std::to_string(bound) + " deliveries");
            }
            std::size_t i = scheduler_.pick(pool_, g_);
            InFlight m = pool_[i];
            pool_.erase(pool_.begin() + static_cast<std::ptrdiff_t>(i));
            ++step_;
            if (states_[m.dst].terminated) {
                trace_.events.push_back({step_, TraceEventKind::discard, m.src, m.dst, m.msg.kind, std::nullopt});
                ++stats_.messages_discarded;
                if (options_.snapshot_every_step) snapshot();
                continue;
            }
            trace_.events.push_back({step_, TraceEventKind::deliver, m.src, m.dst, m.msg.kind, std::nullopt});
            std::size_t matches_before = trace_.matches.size();
            apply(on_receive(g_, states_[m.dst], m.msg));
            if (options_.snapshot_every_step || trace_.matches.size() != matches_before) snapshot();
        }
        if (trace_.snapshots.back().step != step_) snapshot();

        for (const auto& s : states_) {
            if (!s.terminated) {
                throw ProtocolViolation(ViolationKind::unterminated_node, "node " + std::to_string(s.me));
            }
        }

        SimulationResult result;
        result.matching = extract_matching(g_, states_);
        stats_.matched_pairs = result.matching.size();
        stats_.matching_weight = result.matching.total_weight;
        stats_.steps = step_;
        result.trace = std::move(trace_);
        result.stats = stats_;
        result.final_states = std::move(states_);
        return result;
    }

private:
    void apply(Transition t) {
        const NodeId me = t.state.me;
        const bool was_terminated = states_[me].terminated;
        states_[me] = std::move(t.state);

        for (const auto& out : t.sends) {
            if (!used_channels_.insert({me, out.dst}).second) {
                throw ProtocolViolation(ViolationKind::duplicate_send,
                                        std::to_string(me) + " -> " + std::to_string(out.dst));
            }
            trace_.events.push_back({step_, TraceEventKind::send, me, out.dst, out.msg.kind, std::nullopt});
            pool_.push_back({me, out.dst, out.msg, step_});
            ++stats_.messages_total;
            ++(out.msg.kind == MessageKind::req ? stats_.messages_req : stats_.messages_drop);
        }
        if (t.match) record_match(*t.match);
        if (states_[me].terminated && !was_terminated) {
            trace_.events.push_back(
                {step_, TraceEventKind::terminate, me, states_[me].partner, std::nullopt, std::nullopt});
        }
    }

    // Both endpoints report; the first report defines x_i, the second must agree.
    void record_match(const MatchEvent& ev) {
        Edge key = make_edge(ev.node, ev.partner, Weight{});
        auto existing = std::find_if(trace_.matches.begin(), trace_.matches.end(), [&](const MatchEventRecord& r) {
            return r.u == key.u || r.v == key.u || r.u == key.v || r.v == key.v;
        });
        if (existing != trace_.matches.end()) {
            if (existing->u != key.u || existing->v != key.v) {
                throw ProtocolViolation(ViolationKind::asymmetric_partners,
                                        std::to_string(ev.node) + " matched " + std::to_string(ev.partner) +
                                            " but a vertex is already matched elsewhere");
            }
            return;
        }
        MatchEventRecord rec{trace_.matches.size() + 1, key.u, key.v, *g_.find_edge(key.u, key.v), step_};
        trace_.matches.push_back(rec);
        trace_.events.push_back({step_, TraceEventKind::match, key.u, key.v, std::nullopt, rec.index});
    }

    void snapshot() {
        LiveSetSnapshot snap{step_, trace_.matches.size(), {}};
        snap.live.reserve(states_.size());
        for (const auto& s : states_) snap.live.push_back(s.live);
        trace_.snapshots.push_back(std::move(snap));
    }

    const WeightedGraph& g_;
    Scheduler scheduler_;
    SimOptions options_;
    std::vector<NodeState> states_;
    std::vector<InFlight> pool_;
    std::set<std::pair<NodeId, NodeId>> used_channels_;
    Trace trace_;
    RunStats stats_;
    std::uint64_t step_ = 0;
};

} // namespace

SimulationResult simulate(const WeightedGraph& g, Scheduler scheduler, SimOptions options) {
    return Run(g, std::move(scheduler), options).execute();
}

Matching extract_matching(const WeightedGraph& g, std::span<const NodeState> states) {
    if (states.size() != g.vertex_count()) {
        throw std::invalid_argument("expected one state per vertex");
    }
    std::vector<Edge> edges;
    for (const auto& s : states) {
        if (!s.terminated) {
            throw ProtocolViolation(ViolationKind::unterminated_node, "node " + std::to_string(s.me));
        }
        if (!s.partner) continue;
        NodeId p = *s.partner;
        if (p >= states.size() || states[p].partner != s.me) {
            throw ProtocolViolation(ViolationKind::asymmetric_partners,
                                    std::to_string(s.me) + " -> " + std::to_string(p));
        }
        if (s.me < p) edges.push_back(g.edge(*g.find_edge(s.me, p)));
    }
    return make_matching(std::move(edges));
}

} // namespace gmatch
