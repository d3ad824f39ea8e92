#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "rsp/pipeline.hpp"
#include "rsp/spt.hpp"

using namespace rsp;
using namespace rsp::testing;

TEST_CASE("dijkstra on the triangle matches exhaustive enumeration") {
    const Graph g = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 10}}, 0, 2);
    const ShortestPathTree t = dijkstra(g, 0);
    CHECK(t.dist == std::vector<Weight>{0, 1, 2});
    CHECK(t.parent[2] == 1);
    CHECK(*enumerate_shortest(g) == 2.0);
}

TEST_CASE("dijkstra trivial and unreachable cases") {
    const Graph g = make_graph(3, {{0, 1, 4}}, 0, 1);
    const ShortestPathTree t = dijkstra(g, 0);
    CHECK(t.dist[0] == 0);
    CHECK(t.parent[0] == -1);
    CHECK(t.dist[2] == kInf);
    CHECK(t.parent[2] == -1);
    CHECK_FALSE(t.reachable(2));
}

TEST_CASE("dijkstra matches Bellman-Ford on random graphs") {
    for_each_random_graph(60, 101, [](const Graph& g, int) {
        const ShortestPathTree t = dijkstra(g, g.source());
        REQUIRE(t.dist == bellman_ford(g, g.source()));
        // tree consistency: dist[v] = dist[parent] + w(parent_edge)
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (t.parent[v] < 0) continue;
            REQUIRE(t.dist[v] == t.dist[t.parent[v]] + g.edge(t.parent_edge[v]).w);
        }
        // relaxation optimality in both directions
        for (const Edge& e : g.edges()) {
            REQUIRE(t.dist[e.v] <= t.dist[e.u] + e.w);
            REQUIRE(t.dist[e.u] <= t.dist[e.v] + e.w);
        }
    });
}

TEST_CASE("equal-cost relaxations keep the smallest edge id") {
    // both (0,1,2)+(1,3,2) and (0,2,2)+(2,3,2) reach vertex 3 at cost 4
    const Graph g = make_graph(4, {{0, 1, 2}, {0, 2, 2}, {1, 3, 2}, {2, 3, 2}}, 0, 3);
    const ShortestPathTree t = dijkstra(g, 0);
    CHECK(t.dist[3] == 4);
    CHECK(t.parent_edge[3] == 2);
    CHECK(t.parent[3] == 1);
}

TEST_CASE("extract_path") {
    const Graph tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 10}}, 0, 2);
    const TreePath p = extract_path(dijkstra(tri, 0), 2);
    CHECK(p.vertices == std::vector<int>{0, 1, 2});
    CHECK(p.edges == std::vector<int>{0, 1});

    const Graph direct = make_graph(3, {{0, 2, 1}, {0, 1, 1}, {1, 2, 5}}, 0, 2);
    const TreePath q = extract_path(dijkstra(direct, 0), 2);
    CHECK(q.vertices == std::vector<int>{0, 2});

    const Graph chain = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, 0, 3);
    const TreePath r = extract_path(dijkstra(chain, 0), 3);
    CHECK(r.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(r.edges.size() == 3);

    CHECK_THROWS_AS(extract_path(dijkstra(make_graph(3, {{0, 1, 1}}, 0, 2), 0), 2),
                    std::invalid_argument);
}

TEST_CASE("labels on a bare path") {
    const Graph g = make_graph(3, {{0, 1, 1}, {1, 2, 1}}, 0, 2);
    const ShortestPathTree t = dijkstra(g, 0);
    const PathLabeling lab = compute_labels(t, extract_path(t, 2));
    CHECK(lab.l == 2);
    CHECK(lab.label == std::vector<int>{0, 1, 2});
}

TEST_CASE("labels with off-path branches") {
    // s(0) - v1(1) - t(2), a(3) under s, b(4) under v1
    const Graph g = make_graph(5, {{0, 1, 2}, {1, 2, 2}, {0, 3, 1}, {1, 4, 1}}, 0, 2);
    const ShortestPathTree t = dijkstra(g, 0);
    const PathLabeling lab = compute_labels(t, extract_path(t, 2));
    CHECK(lab.label[0] == 0);
    CHECK(lab.label[3] == 0);
    CHECK(lab.label[1] == 1);
    CHECK(lab.label[4] == 1);
    CHECK(lab.label[2] == 2);
    CHECK(lab.on_path_index[4] == -1);
    CHECK(lab.on_path_index[1] == 1);
}

TEST_CASE("labels on a star") {
    // s center, t one leaf, five other leaves
    const Graph g = make_graph(
        7, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {0, 6, 1}}, 0, 6);
    const ShortestPathTree t = dijkstra(g, 0);
    const PathLabeling lab = compute_labels(t, extract_path(t, 6));
    CHECK(lab.l == 1);
    for (int v = 0; v <= 5; ++v) CHECK(lab.label[v] == 0);
    CHECK(lab.label[6] == 1);
}

TEST_CASE("labeling invariants hold on random SPTs") {
    for_each_random_graph(100, 202, [](const Graph& g, int) {
        const Solution sol = solve(g);
        const PathLabeling& lab = sol.labeling;
        const ShortestPathTree& ts = sol.ts;
        for (size_t i = 0; i < lab.path.size(); ++i)
            REQUIRE(lab.label[lab.path[i]] == static_cast<int>(i));
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!ts.reachable(v)) {
                REQUIRE(lab.label[v] == -1);
                continue;
            }
            REQUIRE(lab.label[v] >= 0);
            REQUIRE(lab.label[v] <= lab.l);
            const int p = ts.parent[v];
            if (p < 0) continue;
            if (lab.on_path_index[v] >= 0)
                REQUIRE(lab.label[v] == lab.label[p] + 1);
            else
                REQUIRE(lab.label[v] == lab.label[p]);
        }
    });
}

TEST_CASE("label characterization equals subtree membership") {
    // non-tree edge (x,y) crosses cut i iff label(x) < i <= label(y)
    for_each_random_graph(80, 203, [](const Graph& g, int) {
        const Solution sol = solve(g);
        const PathLabeling& lab = sol.labeling;
        const SubtreeTimes st = subtree_times(sol.ts);
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (sol.ts.parent_edge[e.u] == id || sol.ts.parent_edge[e.v] == id) continue;
            if (!sol.ts.reachable(e.u) || !sol.ts.reachable(e.v)) continue;
            for (int i = 1; i <= lab.l; ++i) {
                const int vi = lab.path[i];
                const bool u_in_t2 = st.in_subtree(vi, e.u);
                const bool v_in_t2 = st.in_subtree(vi, e.v);
                const bool crosses_direct = u_in_t2 != v_in_t2;
                const int lx = std::min(lab.label[e.u], lab.label[e.v]);
                const int ly = std::max(lab.label[e.u], lab.label[e.v]);
                const bool crosses_by_label = lx < i && ly >= i;
                REQUIRE(crosses_by_label == crosses_direct);
            }
        }
    });
}
