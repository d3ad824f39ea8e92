#include "rsp/spt.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsp {

ShortestPathTree dijkstra(const Graph& g, int root) {
    return dijkstra_over(g.vertex_count(), root, [&](int u, auto&& emit) {
        for (auto [to, id] : g.neighbors(u)) emit(to, id, g.edge(id).w);
    });
}

TreePath extract_path(const ShortestPathTree& tree, int target) {
    if (!tree.reachable(target)) throw std::invalid_argument("target unreachable from root");
    TreePath p;
    for (int v = target; v != tree.root; v = tree.parent[static_cast<size_t>(v)]) {
        p.vertices.push_back(v);
        p.edges.push_back(tree.parent_edge[static_cast<size_t>(v)]);
    }
    p.vertices.push_back(tree.root);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

PathLabeling compute_labels(const ShortestPathTree& tree, const TreePath& path) {
    const int n = static_cast<int>(tree.dist.size());
    PathLabeling lab;
    lab.path = path.vertices;
    lab.path_edge_ids = path.edges;
    lab.l = static_cast<int>(path.edges.size());
    lab.label.assign(static_cast<size_t>(n), -1);
    lab.on_path_index.assign(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < path.vertices.size(); ++i)
        lab.on_path_index[static_cast<size_t>(path.vertices[i])] = static_cast<int>(i);

    // Iterative pre-order: off-path children ascending, the path child last
    // with an incremented label. Explicit stack keeps path-like trees from
    // blowing the call stack.
    std::vector<int> stack;
    stack.push_back(tree.root);
    lab.label[static_cast<size_t>(tree.root)] = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        const int lv = lab.label[static_cast<size_t>(v)];
        const auto& kids = tree.children[static_cast<size_t>(v)]; // ascending ids
        // Pushed deepest so it pops after every off-path subtree.
        for (int c : kids) {
            if (lab.on_path_index[static_cast<size_t>(c)] >= 0) {
                lab.label[static_cast<size_t>(c)] = lv + 1;
                stack.push_back(c);
            }
        }
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            if (lab.on_path_index[static_cast<size_t>(*it)] < 0) {
                lab.label[static_cast<size_t>(*it)] = lv;
                stack.push_back(*it);
            }
        }
    }
    return lab;
}

} // namespace rsp
