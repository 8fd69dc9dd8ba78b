#include "gmatch/trace.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>

#include <json.hpp>

namespace gmatch {

const char* to_string(TraceEventKind kind) {
    switch (kind) {
    case TraceEventKind::send: return "send";
    case TraceEventKind::deliver: return "deliver";
    case TraceEventKind::discard: return "discard";
    case TraceEventKind::match: return "match";
    case TraceEventKind::terminate: return "terminate";
    }
    return "?";
}

const char* to_string(Proposition p) {
    switch (p) {
    case Proposition::one_message_per_edge: return "P1";
    case Proposition::live_sets_cover_edges: return "P2";
    case Proposition::match_edge_remains: return "P3";
    case Proposition::termination: return "P4";
    case Proposition::locally_heaviest: return "P5";
    }
    return "P?";
}

const char* describe(Proposition p) {
    switch (p) {
    case Proposition::one_message_per_edge: return "at most one message per node per incident edge";
    case Proposition::live_sets_cover_edges: return "every residual edge is live at both endpoints";
    case Proposition::match_edge_remains: return "every matched edge is still residual when matched";
    case Proposition::termination: return "all nodes terminate and no residual edge remains";
    case Proposition::locally_heaviest: return "every matched edge is locally heaviest when matched";
    }
    return "";
}

namespace {

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

void validate(const WeightedGraph& g, const Trace& trace) {
    const auto n = g.vertex_count();
    if (trace.vertex_count != n) {
        throw TraceMismatch("trace has " + std::to_string(trace.vertex_count) + " nodes, graph has " +
                            std::to_string(n));
    }
    for (const auto& ev : trace.events) {
        if (ev.src >= n || (ev.dst && *ev.dst >= n)) throw TraceMismatch("trace event names an unknown node");
        bool is_message = ev.kind == TraceEventKind::send || ev.kind == TraceEventKind::deliver ||
                          ev.kind == TraceEventKind::discard;
        if (is_message && (!ev.dst || !g.find_edge(ev.src, *ev.dst))) {
            throw TraceMismatch("message between non-adjacent nodes " + std::to_string(ev.src));
        }
    }
    for (const auto& m : trace.matches) {
        auto e = g.find_edge(m.u, m.v);
        if (!e || *e != m.edge) {
            throw TraceMismatch("match record (" + std::to_string(m.u) + "," + std::to_string(m.v) +
                                ") is not an edge of the graph");
        }
    }
    for (const auto& snap : trace.snapshots) {
        if (snap.live.size() != n) throw TraceMismatch("snapshot size differs from node count");
        if (snap.after_match > trace.matches.size()) throw TraceMismatch("snapshot refers to a missing match");
    }
}

Verdict check_one_message(const Trace& trace) {
    Verdict v{Proposition::one_message_per_edge, true, {}};
    std::map<std::pair<NodeId, NodeId>, int> sent;
    for (const auto& ev : trace.events) {
        if (ev.kind != TraceEventKind::send) continue;
        if (++sent[{ev.src, *ev.dst}] > 1) {
            v.passed = false;
            v.detail = "node " + std::to_string(ev.src) + " sent twice to " + std::to_string(*ev.dst) +
                       " (step " + std::to_string(ev.step) + ")";
            return v;
        }
    }
    v.detail = std::to_string(sent.size()) + " directed edges used";
    return v;
}

Verdict check_live_sets(const WeightedGraph& g, const Trace& trace,
                        const std::vector<std::vector<bool>>& residual) {
    Verdict v{Proposition::live_sets_cover_edges, true, {}};
    for (const auto& snap : trace.snapshots) {
        const auto& alive = residual[snap.after_match];
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            if (!alive[e]) continue;
            const Edge& edge = g.edge(e);
            if (!snap.live[edge.u].contains(edge.v) || !snap.live[edge.v].contains(edge.u)) {
                v.passed = false;
                v.detail = "edge " + edge_text(edge) + " in E_" + std::to_string(snap.after_match) +
                           " but not live at step " + std::to_string(snap.step);
                return v;
            }
        }
    }
    v.detail = std::to_string(trace.snapshots.size()) + " snapshots";
    return v;
}

Verdict check_edge_remains(const WeightedGraph& g, const Trace& trace,
                           const std::vector<std::vector<bool>>& residual) {
    Verdict v{Proposition::match_edge_remains, true, {}};
    for (const auto& m : trace.matches) {
        if (!residual[m.index - 1][m.edge]) {
            v.passed = false;
            v.detail = "e_" + std::to_string(m.index) + " = " + edge_text(g.edge(m.edge)) + " not in E_" +
                       std::to_string(m.index - 1);
            return v;
        }
    }
    v.detail = std::to_string(trace.matches.size()) + " matches";
    return v;
}

Verdict check_termination(const WeightedGraph& g, const Trace& trace,
                          const std::vector<std::vector<bool>>& residual) {
    Verdict v{Proposition::termination, true, {}};
    std::vector<int> terminated(g.vertex_count(), 0);
    for (const auto& ev : trace.events) {
        if (ev.kind == TraceEventKind::terminate) ++terminated[ev.src];
    }
    for (NodeId x = 0; x < g.vertex_count(); ++x) {
        if (terminated[x] != 1) {
            v.passed = false;
            v.detail = "node " + std::to_string(x) + " terminated " + std::to_string(terminated[x]) + " times";
            return v;
        }
    }
    const auto& last = residual.back();
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (last[e]) {
            v.passed = false;
            v.detail = "edge " + edge_text(g.edge(e)) + " remains in E_" + std::to_string(trace.matches.size());
            return v;
        }
    }
    v.detail = "E_" + std::to_string(trace.matches.size()) + " empty";
    return v;
}

Verdict check_locally_heaviest(const WeightedGraph& g, const Trace& trace,
                               const std::vector<std::vector<bool>>& residual) {
    Verdict v{Proposition::locally_heaviest, true, {}};
    for (const auto& m : trace.matches) {
        const auto& alive = residual[m.index - 1];
        const std::string name = "e_" + std::to_string(m.index) + " = " + edge_text(g.edge(m.edge));
        if (!alive[m.edge]) {
            v.passed = false;
            v.detail = name + " not in E_" + std::to_string(m.index - 1);
            return v;
        }
        for (NodeId end : {m.u, m.v}) {
            for (const auto& inc : g.incident(end)) {
                if (inc.edge != m.edge && alive[inc.edge] && g.heavier(inc.edge, m.edge)) {
                    v.passed = false;
                    v.detail = name + " lighter than " + edge_text(g.edge(inc.edge)) + " in E_" +
                               std::to_string(m.index - 1);
                    return v;
                }
            }
        }
    }
    v.detail = std::to_string(trace.matches.size()) + " matches";
    return v;
}

} // namespace

std::vector<std::vector<bool>> residual_sets(const WeightedGraph& g, const Trace& trace) {
    std::vector<std::vector<bool>> sets;
    sets.reserve(trace.matches.size() + 1);
    sets.emplace_back(g.edge_count(), true);
    for (const auto& m : trace.matches) {
        std::vector<bool> next = sets.back();
        for (NodeId end : {m.u, m.v}) {
            for (const auto& inc : g.incident(end)) next[inc.edge] = false;
        }
        sets.push_back(std::move(next));
    }
    return sets;
}

std::vector<Verdict> check_trace(const WeightedGraph& g, const Trace& trace) {
    validate(g, trace);
    auto residual = residual_sets(g, trace);
    for (std::size_t i = 0; i < trace.matches.size(); ++i) {
        if (trace.matches[i].index != i + 1) throw TraceMismatch("match records out of order");
    }
    return {
        check_one_message(trace),
        check_live_sets(g, trace, residual),
        check_edge_remains(g, trace, residual),
        check_termination(g, trace, residual),
        check_locally_heaviest(g, trace, residual),
    };
}

bool all_passed(const std::vector<Verdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

void write_trace_jsonl(std::ostream& os, const WeightedGraph& g, const Trace& trace) {
    using nlohmann::ordered_json;
    for (const auto& ev : trace.events) {
        ordered_json line;
        line["step"] = ev.step;
        line["kind"] = to_string(ev.kind);
        line["src"] = ev.src;
        line["dst"] = ev.dst ? ordered_json(*ev.dst) : ordered_json(nullptr);
        switch (ev.kind) {
        case TraceEventKind::send:
        case TraceEventKind::deliver:
        case TraceEventKind::discard:
            line["payload"] = to_string(*ev.message);
            break;
        case TraceEventKind::match: {
            const auto& rec = trace.matches.at(*ev.match_index - 1);
            line["payload"] = {{"index", rec.index}, {"weight", g.edge(rec.edge).w.to_string()}};
            break;
        }
        case TraceEventKind::terminate:
            line["payload"] = {{"matched", ev.dst.has_value()}};
            break;
        }
        os << line.dump() << '\n';
    }
}

} // namespace gmatch
