#include "rsp/node_replacement.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsp {

std::vector<int> classify_forest(const PathLabeling& lab) {
    std::vector<int> forest(lab.label.size(), -1);
    for (size_t u = 0; u < lab.label.size(); ++u) {
        const int lu = lab.label[u];
        if (lu >= 1 && lu <= lab.l - 1 && lab.on_path_index[u] < 0) forest[u] = lu;
    }
    return forest;
}

ContractedGraph build_contracted_graph(const Graph& g, const ShortestPathTree& ts,
                                       const PathLabeling& lab,
                                       const std::vector<int>& forest, OpCounters* ops) {
    const int n = g.vertex_count();
    ContractedGraph cg;
    cg.n = n;
    cg.forest = forest;
    cg.adj.assign(static_cast<size_t>(n), {});

    std::vector<Weight> wtilde(static_cast<size_t>(n), kInf);
    std::vector<int> wtilde_edge(static_cast<size_t>(n), -1);
    std::vector<int> wtilde_attach(static_cast<size_t>(n), -1);
    std::vector<int> internal;

    // fold (u,v) into w~(s,v) when u lies in T_1(v_i) for v's forest i.
    auto fold = [&](int u, int v, int id, Weight w) {
        if (forest[static_cast<size_t>(v)] < 0) return;
        const int lu = lab.label[static_cast<size_t>(u)];
        if (lu < 0 || lu >= forest[static_cast<size_t>(v)]) return;
        const Weight cand = ts.dist[static_cast<size_t>(u)] + w;
        if (cand < wtilde[static_cast<size_t>(v)]) { // strict: first id wins ties
            wtilde[static_cast<size_t>(v)] = cand;
            wtilde_edge[static_cast<size_t>(v)] = id;
            wtilde_attach[static_cast<size_t>(v)] = u;
        }
    };

    for (int id = 0; id < g.edge_count(); ++id) {
        if (ops) ++ops->gtilde_scans;
        const Edge& e = g.edge(id);
        const int fu = forest[static_cast<size_t>(e.u)];
        const int fv = forest[static_cast<size_t>(e.v)];
        if (fu >= 0 && fu == fv) {
            internal.push_back(id);
            continue;
        }
        fold(e.u, e.v, id, e.w);
        fold(e.v, e.u, id, e.w);
        // forest-to-T_2 edges are the C'' candidates; they stay out of G~.
    }

    const int s = ts.root;
    auto add_edge = [&](ContractedGraph::GEdge ge) {
        const int idx = static_cast<int>(cg.edges.size());
        cg.adj[static_cast<size_t>(ge.u)].emplace_back(ge.v, idx);
        cg.adj[static_cast<size_t>(ge.v)].emplace_back(ge.u, idx);
        cg.edges.push_back(ge);
    };
    // Canonical order (contracted by vertex, then internal by original id)
    // keeps the contracted-graph SPT deterministic.
    for (int v = 0; v < n; ++v) {
        if (wtilde[static_cast<size_t>(v)] < kInf)
            add_edge({s, v, wtilde[static_cast<size_t>(v)], wtilde_edge[static_cast<size_t>(v)],
                      wtilde_attach[static_cast<size_t>(v)], true});
    }
    for (int id : internal) {
        const Edge& e = g.edge(id);
        add_edge({e.u, e.v, e.w, id, -1, false});
    }
    return cg;
}

ShortestPathTree partial_distances(const ContractedGraph& cg, int source, OpCounters* ops) {
    (void)ops; // SPT work is a T_SPT term, not part of the m + l^2 budget
    return dijkstra_over(cg.n, source, [&](int u, auto&& emit) {
        for (auto [to, idx] : cg.adj[static_cast<size_t>(u)])
            emit(to, idx, cg.edges[static_cast<size_t>(idx)].w);
    });
}

std::vector<ReplacementReport> node_replacements(const Graph& g, const ShortestPathTree& /*ts*/,
                                                 const ShortestPathTree& tt,
                                                 const PathLabeling& lab, const RspDag& dag,
                                                 const ContractedGraph& cg,
                                                 const ShortestPathTree& ptree, OpCounters* ops) {
    const int l = lab.l;
    std::vector<ReplacementReport> reports;
    if (l < 2) return reports;

    // One pass collects the best C'' candidate per failed vertex; an edge
    // qualifies for at most one index (its forest endpoint's), so this is
    // the whole C'' budget.
    std::vector<std::optional<CandidateEdge>> best_cpp(static_cast<size_t>(l), std::nullopt);
    auto consider = [&](int x, int y, int id, Weight w) {
        const int i = cg.forest[static_cast<size_t>(x)];
        if (i < 0 || lab.label[static_cast<size_t>(y)] <= i) return;
        const Weight cost =
            ptree.dist[static_cast<size_t>(x)] + w + tt.dist[static_cast<size_t>(y)];
        if (!(cost < kInf)) return;
        auto& best = best_cpp[static_cast<size_t>(i)];
        if (!best || cost < best->cost || (cost == best->cost && id < best->edge))
            best = CandidateEdge{id, x, y, cost};
    };
    for (int id = 0; id < g.edge_count(); ++id) {
        if (ops) ++ops->cpp_scan;
        const Edge& e = g.edge(id);
        consider(e.u, e.v, id, e.w);
        consider(e.v, e.u, id, e.w);
    }

    reports.reserve(static_cast<size_t>(l - 1));
    for (int i = 1; i <= l - 1; ++i) {
        if (ops) ++ops->report_reads;
        ReplacementReport r;
        r.kind = FailedKind::kNode;
        r.index = i;

        const auto& prime = dag.min_at(i - 1, i + 1);
        const auto& dpp = best_cpp[static_cast<size_t>(i)];
        // d' wins exact ties: deterministic and cheaper to reconstruct.
        if (prime && (!dpp || prime->cost <= dpp->cost)) {
            r.swap = *prime;
            r.swap_kind = SwapKind::kPrime;
            r.distance = prime->cost;
        } else if (dpp) {
            r.swap = *dpp;
            r.swap_kind = SwapKind::kDoublePrime;
            r.distance = dpp->cost;
        }
        reports.push_back(r);
    }
    return reports;
}

namespace {

void append_root_path(const ShortestPathTree& tree, int v, std::vector<int>& out) {
    const size_t first = out.size();
    for (int u = v; u != -1; u = tree.parent[static_cast<size_t>(u)]) out.push_back(u);
    std::reverse(out.begin() + static_cast<long>(first), out.end());
}

} // namespace

std::vector<int> reconstruct_node_path(const ReplacementReport& report,
                                       const ShortestPathTree& ts,
                                       const ShortestPathTree& tt,
                                       const ContractedGraph& cg,
                                       const ShortestPathTree& ptree) {
    if (!report.distance || !report.swap)
        throw std::invalid_argument("no replacement path to reconstruct");
    const CandidateEdge& swap = *report.swap;

    std::vector<int> path;
    if (report.swap_kind == SwapKind::kPrime) {
        append_root_path(ts, swap.x, path); // s .. x inside T_1(v_i)
    } else {
        // Contracted-graph chain s, a_1, .., x; the leading contracted edge
        // unfolds into the T_s path to its attachment point.
        std::vector<int> chain;
        std::vector<int> chain_edges;
        for (int u = swap.x; u != ptree.root; u = ptree.parent[static_cast<size_t>(u)]) {
            chain.push_back(u);
            chain_edges.push_back(ptree.parent_edge[static_cast<size_t>(u)]);
        }
        std::reverse(chain.begin(), chain.end());
        std::reverse(chain_edges.begin(), chain_edges.end());
        if (chain.empty() || !cg.edges[static_cast<size_t>(chain_edges.front())].contracted)
            throw std::logic_error("contracted-graph chain must start with a contracted edge");
        append_root_path(ts, cg.edges[static_cast<size_t>(chain_edges.front())].attach, path);
        path.insert(path.end(), chain.begin(), chain.end());
    }
    for (int u = swap.y; u != -1; u = tt.parent[static_cast<size_t>(u)]) path.push_back(u);
    return path;
}

} // namespace rsp
