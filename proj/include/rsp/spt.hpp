// spt.hpp - shortest path trees, path extraction and vertex labeling.
//
// Dijkstra is deterministic: among equal tentative distances the smaller
// vertex id settles first, and among equal-cost relaxations the smaller edge
// id becomes the parent edge. That makes T_s, T_t and everything derived
// from them reproducible bit for bit.

#ifndef RSP_SPT_HPP
#define RSP_SPT_HPP

#include <vector>

#include "rsp/graph.hpp"

namespace rsp {

struct ShortestPathTree {
    int root = 0;
    std::vector<Weight> dist;        // kInf for unreachable
    std::vector<int> parent;         // -1 for root / unreachable
    std::vector<int> parent_edge;    // -1 likewise
    std::vector<std::vector<int>> children; // ascending vertex id

    bool reachable(int v) const { return dist[static_cast<size_t>(v)] < kInf; }
};

ShortestPathTree dijkstra(const Graph& g, int root);

// Root-to-target tree path. vertices has edges.size()+1 entries.
struct TreePath {
    std::vector<int> vertices;
    std::vector<int> edges;
};

// Precondition: target reachable in `tree` (throws std::invalid_argument otherwise).
TreePath extract_path(const ShortestPathTree& tree, int target);

struct PathLabeling {
    std::vector<int> path;          // v_0 .. v_l
    std::vector<int> path_edge_ids; // l entries
    int l = 0;
    std::vector<int> label;         // per vertex, 0..l; -1 if unreachable from root
    std::vector<int> on_path_index; // i if the vertex is v_i, else -1
};

// Pre-order traversal of `tree`: at a path vertex v_i every off-path child is
// visited with label i (ascending id) and the path child v_{i+1} last with
// label i+1; labels propagate unchanged below off-path vertices.
PathLabeling compute_labels(const ShortestPathTree& tree, const TreePath& path);

// Shared Dijkstra core so the contracted graph reuses the exact tie rules.
// AdjacencyFn: void(int v, EmitFn) where EmitFn is void(int to, int edge_id, Weight w).
template <typename AdjacencyFn>
ShortestPathTree dijkstra_over(int n, int root, AdjacencyFn&& adjacency);

} // namespace rsp

#include "rsp/spt_impl.hpp"

#endif
