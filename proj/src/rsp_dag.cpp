#include "rsp/rsp_dag.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rsp {

RspDag::RspDag(int l) : l_(l) {
    if (l < 1) throw std::invalid_argument("RSP-DAG needs l >= 1");
    sets_.assign(static_cast<size_t>(node_count_for(l)), {});
    min_.assign(sets_.size(), std::nullopt);
}

int RspDag::node_index(int i, int j) const {
    assert(0 <= i && i < j && j <= l_);
    // Row i holds pairs (i, i+1) .. (i, l).
    const long row_start = static_cast<long>(i) * l_ - static_cast<long>(i) * (i - 1) / 2;
    return static_cast<int>(row_start + (j - i - 1));
}

std::vector<CandidateEdge>& RspDag::set_at(int i, int j) {
    return sets_[static_cast<size_t>(node_index(i, j))];
}

const std::vector<CandidateEdge>& RspDag::set_at(int i, int j) const {
    return sets_[static_cast<size_t>(node_index(i, j))];
}

const std::optional<CandidateEdge>& RspDag::min_at(int i, int j) const {
    return min_[static_cast<size_t>(node_index(i, j))];
}

namespace {

// cost first, then edge id: deterministic swap edges.
bool better(const CandidateEdge& a, const CandidateEdge& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.edge < b.edge);
}

} // namespace

void RspDag::run_sweep(OpCounters* ops) {
    // Decreasing span realizes the BFS levels from (0, l): both parents of a
    // node have strictly larger span, so their minima arrive before it runs.
    for (int span = l_; span >= 1; --span) {
        for (int i = 0; i + span <= l_; ++i) {
            const int j = i + span;
            const int idx = node_index(i, j);
            if (ops) ++ops->sweep_nodes;

            std::optional<CandidateEdge> best;
            for (const CandidateEdge& c : sets_[static_cast<size_t>(idx)]) {
                if (ops) ++ops->sweep_scans;
                if (!best || better(c, *best)) best = c;
            }
            min_[static_cast<size_t>(idx)] = best;

            if (span > 1 && best) {
                set_at(i, j - 1).push_back(*best);
                set_at(i + 1, j).push_back(*best);
                if (ops) ops->sweep_pushes += 2;
            }
        }
    }
}

RspDag partition_candidates(const Graph& g, const ShortestPathTree& ts,
                            const ShortestPathTree& tt, const PathLabeling& lab,
                            OpCounters* ops) {
    RspDag dag(lab.l);
    for (int id = 0; id < g.edge_count(); ++id) {
        if (ops) ++ops->partition_scans;
        const Edge& e = g.edge(id);
        // Tree edges are identified by id, so a parallel twin of a tree edge
        // still counts as a crossing candidate.
        if (ts.parent_edge[static_cast<size_t>(e.u)] == id ||
            ts.parent_edge[static_cast<size_t>(e.v)] == id)
            continue;
        const int lu = lab.label[static_cast<size_t>(e.u)];
        const int lv = lab.label[static_cast<size_t>(e.v)];
        if (lu < 0 || lv < 0 || lu == lv) continue; // unreachable or never crossing

        const int x = lu < lv ? e.u : e.v;
        const int y = lu < lv ? e.v : e.u;
        const Weight cost = ts.dist[static_cast<size_t>(x)] + e.w + tt.dist[static_cast<size_t>(y)];
        if (!(cost < kInf)) continue; // endpoint cut off from t

        dag.set_at(std::min(lu, lv), std::max(lu, lv))
            .push_back(CandidateEdge{id, x, y, cost});
        if (ops) ++ops->partition_inserts;
    }
    return dag;
}

std::vector<ReplacementReport> edge_replacements(const RspDag& dag, OpCounters* ops) {
    std::vector<ReplacementReport> reports;
    reports.reserve(static_cast<size_t>(dag.l()));
    for (int i = 1; i <= dag.l(); ++i) {
        if (ops) ++ops->report_reads;
        ReplacementReport r;
        r.kind = FailedKind::kEdge;
        r.index = i;
        r.swap_kind = SwapKind::kCut;
        if (const auto& m = dag.min_at(i - 1, i)) {
            r.swap = *m;
            r.distance = m->cost;
        }
        reports.push_back(r);
    }
    return reports;
}

namespace {

void append_root_path(const ShortestPathTree& tree, int v, std::vector<int>& out) {
    size_t first = out.size();
    for (int u = v; u != -1; u = tree.parent[static_cast<size_t>(u)]) out.push_back(u);
    std::reverse(out.begin() + static_cast<long>(first), out.end());
}

void append_to_root_path(const ShortestPathTree& tree, int v, std::vector<int>& out) {
    for (int u = v; u != -1; u = tree.parent[static_cast<size_t>(u)]) out.push_back(u);
}

} // namespace

std::vector<int> reconstruct_edge_path(ReplacementReport& report, const Graph& g,
                                       const ShortestPathTree& ts,
                                       const ShortestPathTree& tt, const PathLabeling& lab) {
    if (!report.distance || !report.swap)
        throw std::invalid_argument("no replacement path to reconstruct");
    const int i = report.index;
    CandidateEdge swap = *report.swap;

    // The T_t chain from y normally stays on the t-side of the cut
    // (label >= i). Under exact cost ties it may cross back; the last
    // crossing edge on the chain is then itself a minimum-cost candidate
    // (triangle inequality both ways), so swap to it.
    int last_below = -1; // chain position of the last label < i vertex
    std::vector<int> chain;
    append_to_root_path(tt, swap.y, chain); // y .. t
    for (size_t k = 0; k < chain.size(); ++k)
        if (lab.label[static_cast<size_t>(chain[k])] < i) last_below = static_cast<int>(k);
    if (last_below >= 0) {
        const int a = chain[static_cast<size_t>(last_below)];
        const int b = chain[static_cast<size_t>(last_below) + 1];
        const int edge = tt.parent_edge[static_cast<size_t>(a)];
        const Weight cost = ts.dist[static_cast<size_t>(a)] + g.edge(edge).w +
                            tt.dist[static_cast<size_t>(b)];
        if (cost != swap.cost)
            throw std::logic_error("tie substitution changed the replacement cost");
        swap = CandidateEdge{edge, a, b, cost};
        report.swap = swap;
    }

    std::vector<int> path;
    append_root_path(ts, swap.x, path); // s .. x, entirely inside T_1(e_i)
    for (int u = swap.y; u != -1; u = tt.parent[static_cast<size_t>(u)]) path.push_back(u);
    return path;
}

} // namespace rsp
