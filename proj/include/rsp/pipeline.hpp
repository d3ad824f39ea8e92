// pipeline.hpp - one pass answering both replacement problems.

#ifndef RSP_PIPELINE_HPP
#define RSP_PIPELINE_HPP

#include <vector>

#include "rsp/counters.hpp"
#include "rsp/graph.hpp"
#include "rsp/node_replacement.hpp"
#include "rsp/rsp_dag.hpp"
#include "rsp/spt.hpp"

namespace rsp {

struct Solution {
    ShortestPathTree ts;
    ShortestPathTree tt;
    PathLabeling labeling;
    RspDag dag;
    ContractedGraph gtilde;
    ShortestPathTree partial; // SPT of the contracted graph
    std::vector<ReplacementReport> edge_reports;
    std::vector<ReplacementReport> node_reports;
    OpCounters ops;
    StageCounts stages;
};

// Runs every stage exactly once: T_s, T_t, labeling, partition + sweep,
// contracted graph + its SPT, then reads off both report lists.
// Precondition: target reachable (throws std::invalid_argument otherwise).
Solution solve(const Graph& g);

} // namespace rsp

#endif
