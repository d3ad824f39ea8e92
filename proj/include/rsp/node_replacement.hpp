// node_replacement.hpp - node replacement paths via the contracted graph.
//
// Removing path vertex v_i splits T_s into T_1(v_i) (labels < i), the forest
// F(v_i) (label i, off path) and T_2(v_i) (labels > i). Crossing edges from
// T_1 are answered by the already-swept DAG at node (i-1, i+1); edges from
// the forest need partial distances d(s,x) in G - v_i - T_2(v_i), obtained
// from a single SPT over the union graph that contracts each forest's T_1
// attachment edges into s.

#ifndef RSP_NODE_REPLACEMENT_HPP
#define RSP_NODE_REPLACEMENT_HPP

#include <vector>

#include "rsp/counters.hpp"
#include "rsp/graph.hpp"
#include "rsp/rsp_dag.hpp"
#include "rsp/spt.hpp"

namespace rsp {

// forest[u] = i iff label(u) = i, u is off the path and 1 <= i <= l-1; else -1.
std::vector<int> classify_forest(const PathLabeling& lab);

struct ContractedGraph {
    struct GEdge {
        int u;              // s for contracted edges
        int v;
        Weight w;           // original weight, or the w~ minimum
        int original_edge;  // arg-min edge id for contracted edges
        int attach;         // T_1 endpoint of that arg-min edge; -1 if not contracted
        bool contracted;
    };

    int n = 0; // same vertex id space as the original graph
    std::vector<GEdge> edges;
    std::vector<std::vector<std::pair<int, int>>> adj; // (neighbor, GEdge index)
    std::vector<int> forest;
};

// One pass over the original edges: same-forest edges are kept, edges from
// label < forest(v) fold into the contracted weight w~(s,v), everything else
// (v_i-incident, forest-to-T_2) is left out.
ContractedGraph build_contracted_graph(const Graph& g, const ShortestPathTree& ts,
                                       const PathLabeling& lab,
                                       const std::vector<int>& forest, OpCounters* ops);

// SPT of the contracted graph rooted at s; dist[x] is the partial distance
// d_{G - v_i - T_2(v_i)}(s, x) for every forest vertex x with forest(x) = i.
ShortestPathTree partial_distances(const ContractedGraph& cg, int source, OpCounters* ops);

// Reports for internal path vertices v_1..v_{l-1}: d' from the swept DAG,
// d'' from one pass over the C'' candidates, combined by min (d' on ties).
std::vector<ReplacementReport> node_replacements(const Graph& g, const ShortestPathTree& ts,
                                                 const ShortestPathTree& tt,
                                                 const PathLabeling& lab, const RspDag& dag,
                                                 const ContractedGraph& cg,
                                                 const ShortestPathTree& ptree, OpCounters* ops);

// C' winners expand through T_s; C'' winners expand the contracted-graph
// chain, unfolding the leading contracted edge into its T_s attachment path.
// Call only for finite-distance reports.
std::vector<int> reconstruct_node_path(const ReplacementReport& report,
                                       const ShortestPathTree& ts,
                                       const ShortestPathTree& tt,
                                       const ContractedGraph& cg,
                                       const ShortestPathTree& ptree);

} // namespace rsp

#endif
