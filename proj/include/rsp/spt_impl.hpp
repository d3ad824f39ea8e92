// spt_impl.hpp - templated Dijkstra core (included from spt.hpp).

#ifndef RSP_SPT_IMPL_HPP
#define RSP_SPT_IMPL_HPP

#include <queue>
#include <utility>

namespace rsp {

template <typename AdjacencyFn>
ShortestPathTree dijkstra_over(int n, int root, AdjacencyFn&& adjacency) {
    ShortestPathTree t;
    t.root = root;
    t.dist.assign(static_cast<size_t>(n), kInf);
    t.parent.assign(static_cast<size_t>(n), -1);
    t.parent_edge.assign(static_cast<size_t>(n), -1);
    t.children.assign(static_cast<size_t>(n), {});

    // (distance, vertex): ties pop the smaller vertex id first.
    using Item = std::pair<Weight, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    std::vector<char> settled(static_cast<size_t>(n), 0);

    t.dist[static_cast<size_t>(root)] = 0;
    heap.emplace(0.0, root);

    while (!heap.empty()) {
        const Weight d = heap.top().first;
        const int u = heap.top().second;
        heap.pop();
        if (settled[static_cast<size_t>(u)]) continue;
        settled[static_cast<size_t>(u)] = 1;

        adjacency(u, [&](int to, int edge_id, Weight w) {
            const Weight nd = d + w;
            Weight& cur = t.dist[static_cast<size_t>(to)];
            if (nd < cur) {
                cur = nd;
                t.parent[static_cast<size_t>(to)] = u;
                t.parent_edge[static_cast<size_t>(to)] = edge_id;
                heap.emplace(nd, to);
            } else if (nd == cur && edge_id < t.parent_edge[static_cast<size_t>(to)]) {
                // Equal-cost relaxation: keep the smallest edge id. The parent
                // still has strictly smaller dist (weights are positive), so
                // this cannot create a cycle.
                t.parent[static_cast<size_t>(to)] = u;
                t.parent_edge[static_cast<size_t>(to)] = edge_id;
            }
        });
    }

    for (int v = 0; v < n; ++v) {
        const int p = t.parent[static_cast<size_t>(v)];
        if (p >= 0) t.children[static_cast<size_t>(p)].push_back(v);
    }
    return t;
}

} // namespace rsp

#endif
