// rsp_dag.hpp - edge replacement paths via the triangular candidate DAG.
//
// Non-tree edges (x,y) with label(x) < label(y) are bucketed by label pair
// into node sets E_(i,j). A sweep in decreasing span order pushes each node's
// minimum-cost candidate to its two children (i,j-1) and (i+1,j); sink
// (i-1,i) then holds the swap edge for the i-th path edge. The DAG itself is
// implicit: children are computed arithmetically, no edge list is stored.

#ifndef RSP_DAG_HPP
#define RSP_DAG_HPP

#include <optional>
#include <vector>

#include "rsp/counters.hpp"
#include "rsp/graph.hpp"
#include "rsp/spt.hpp"

namespace rsp {

// A crossing-edge candidate. x is the endpoint with the smaller label.
// cost is the full replacement path length through this edge; for edge
// failures and C' node failures that is d(s,x) + w + d(y,t), for C'' node
// failures the first term is the partial distance from the contracted graph.
struct CandidateEdge {
    int edge = -1;
    int x = -1;
    int y = -1;
    Weight cost = kInf;
};

class RspDag {
public:
    RspDag() = default; // empty placeholder, no nodes
    explicit RspDag(int l);

    int l() const { return l_; }
    int node_count() const { return static_cast<int>(sets_.size()); }
    static long node_count_for(int l) { return static_cast<long>(l) * (l + 1) / 2; }
    // Directed edges, per construction: two per node with span > 1.
    static long edge_count_for(int l) { return 2 * (node_count_for(l) - l); }

    // Triangular index for 0 <= i < j <= l.
    int node_index(int i, int j) const;

    std::vector<CandidateEdge>& set_at(int i, int j);
    const std::vector<CandidateEdge>& set_at(int i, int j) const;
    const std::optional<CandidateEdge>& min_at(int i, int j) const;

    void run_sweep(OpCounters* ops);

private:
    int l_ = 0;
    std::vector<std::vector<CandidateEdge>> sets_;
    std::vector<std::optional<CandidateEdge>> min_;
};

// Buckets every non-tree, unequal-label, finite-cost edge into its E_(i,j).
RspDag partition_candidates(const Graph& g, const ShortestPathTree& ts,
                            const ShortestPathTree& tt, const PathLabeling& lab,
                            OpCounters* ops);

// Level sweep filling node minima (ties broken by smaller edge id).
inline void build_and_sweep(RspDag& dag, OpCounters* ops) { dag.run_sweep(ops); }

enum class FailedKind { kEdge, kNode };
enum class SwapKind { kCut, kPrime, kDoublePrime };

struct ReplacementReport {
    FailedKind kind = FailedKind::kEdge;
    int index = 0;                       // e_i: i in 1..l; v_i: i in 1..l-1
    std::optional<Weight> distance;      // empty = no replacement path
    std::optional<CandidateEdge> swap;
    SwapKind swap_kind = SwapKind::kCut;
};

// One report per path edge e_1..e_l, read off the sink minima.
std::vector<ReplacementReport> edge_replacements(const RspDag& dag, OpCounters* ops);

// Expands s ~> x -> y ~> t through T_s and T_t. Under exact cost ties the
// T_t suffix can cross back over the cut; in that case the last crossing
// edge of the suffix is an equal-cost candidate and is substituted (the
// report's swap edge is updated to match), so the result always uses exactly
// one crossing edge of C(e_i). Call only for finite-distance reports.
std::vector<int> reconstruct_edge_path(ReplacementReport& report, const Graph& g,
                                       const ShortestPathTree& ts,
                                       const ShortestPathTree& tt,
                                       const PathLabeling& lab);

} // namespace rsp

#endif
