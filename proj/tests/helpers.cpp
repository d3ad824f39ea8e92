#include "helpers.hpp"

#include <algorithm>

namespace rsp::testing {

Graph make_graph(int n, const std::vector<Edge>& edges, int s, int t) {
    return Graph(n, edges, s, t);
}

std::vector<Weight> bellman_ford(const Graph& g, int root, int masked_edge, int masked_vertex) {
    const int n = g.vertex_count();
    std::vector<Weight> dist(static_cast<size_t>(n), kInf);
    if (root == masked_vertex) return dist;
    dist[static_cast<size_t>(root)] = 0;
    for (int round = 0; round < n - 1; ++round) {
        bool changed = false;
        for (int id = 0; id < g.edge_count(); ++id) {
            if (id == masked_edge) continue;
            const Edge& e = g.edge(id);
            if (e.u == masked_vertex || e.v == masked_vertex) continue;
            if (dist[static_cast<size_t>(e.u)] + e.w < dist[static_cast<size_t>(e.v)]) {
                dist[static_cast<size_t>(e.v)] = dist[static_cast<size_t>(e.u)] + e.w;
                changed = true;
            }
            if (dist[static_cast<size_t>(e.v)] + e.w < dist[static_cast<size_t>(e.u)]) {
                dist[static_cast<size_t>(e.u)] = dist[static_cast<size_t>(e.v)] + e.w;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

namespace {

void dfs_paths(const Graph& g, int at, int masked_edge, int masked_vertex,
               std::vector<char>& used, Weight sofar, std::optional<Weight>& best) {
    if (at == g.target()) {
        if (!best || sofar < *best) best = sofar;
        return;
    }
    for (auto [to, id] : g.neighbors(at)) {
        if (id == masked_edge || to == masked_vertex) continue;
        if (used[static_cast<size_t>(to)]) continue;
        used[static_cast<size_t>(to)] = 1;
        dfs_paths(g, to, masked_edge, masked_vertex, used, sofar + g.edge(id).w, best);
        used[static_cast<size_t>(to)] = 0;
    }
}

} // namespace

std::optional<Weight> enumerate_shortest(const Graph& g, int masked_edge, int masked_vertex) {
    std::optional<Weight> best;
    if (g.source() == masked_vertex) return best;
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    used[static_cast<size_t>(g.source())] = 1;
    dfs_paths(g, g.source(), masked_edge, masked_vertex, used, 0, best);
    return best;
}

SubtreeTimes subtree_times(const ShortestPathTree& tree) {
    const int n = static_cast<int>(tree.dist.size());
    SubtreeTimes st;
    st.tin.assign(static_cast<size_t>(n), -1);
    st.tout.assign(static_cast<size_t>(n), -2);
    int clock = 0;
    // (vertex, child cursor) DFS without recursion.
    std::vector<std::pair<int, size_t>> stack{{tree.root, 0}};
    st.tin[static_cast<size_t>(tree.root)] = clock++;
    while (!stack.empty()) {
        auto& [v, cursor] = stack.back();
        const auto& kids = tree.children[static_cast<size_t>(v)];
        if (cursor < kids.size()) {
            const int c = kids[cursor++];
            st.tin[static_cast<size_t>(c)] = clock++;
            stack.emplace_back(c, 0);
        } else {
            st.tout[static_cast<size_t>(v)] = clock - 1;
            stack.pop_back();
        }
    }
    return st;
}

std::optional<CandidateEdge> brute_min_crossing(const Graph& g, const ShortestPathTree& ts,
                                                const ShortestPathTree& tt,
                                                const PathLabeling& lab, int max_x, int min_y) {
    std::optional<CandidateEdge> best;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (ts.parent_edge[static_cast<size_t>(e.u)] == id ||
            ts.parent_edge[static_cast<size_t>(e.v)] == id)
            continue;
        int lu = lab.label[static_cast<size_t>(e.u)];
        int lv = lab.label[static_cast<size_t>(e.v)];
        int x = e.u, y = e.v;
        if (lu > lv) {
            std::swap(lu, lv);
            std::swap(x, y);
        }
        if (lu < 0 || lv < 0) continue;
        if (lu > max_x || lv < min_y) continue;
        const Weight cost =
            ts.dist[static_cast<size_t>(x)] + e.w + tt.dist[static_cast<size_t>(y)];
        if (!(cost < kInf)) continue;
        if (!best || cost < best->cost || (cost == best->cost && id < best->edge))
            best = CandidateEdge{id, x, y, cost};
    }
    return best;
}

void for_each_random_graph(int count, std::uint64_t seed,
                           const std::function<void(const Graph&, int)>& fn) {
    for_each_random_graph(count, seed, CorpusParams{}, fn);
}

void for_each_random_graph(int count, std::uint64_t seed, const CorpusParams& params,
                           const std::function<void(const Graph&, int)>& fn) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) fn(random_connected_graph(rng, params), i);
}

} // namespace rsp::testing
