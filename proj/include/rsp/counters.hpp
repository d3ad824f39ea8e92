// counters.hpp - instrumentation for work-bound and single-pass checks.
//
// OpCounters tallies the elementary operations of phase 2 (everything after
// the shortest path trees are built). Heap operations inside SPT builds are
// deliberately not counted here: they belong to the T_SPT term of the time
// bound, not to the m + l^2 term the counters certify.

#ifndef RSP_COUNTERS_HPP
#define RSP_COUNTERS_HPP

#include <cstdint>

namespace rsp {

struct OpCounters {
    std::int64_t partition_scans = 0;   // graph edges examined while bucketing candidates
    std::int64_t partition_inserts = 0; // candidates placed into initial DAG sets
    std::int64_t sweep_nodes = 0;       // DAG nodes visited by the sweep
    std::int64_t sweep_scans = 0;       // candidates examined during per-node min scans
    std::int64_t sweep_pushes = 0;      // minima copied into child sets
    std::int64_t classify_ops = 0;      // vertices classified into forests
    std::int64_t gtilde_scans = 0;      // graph edges examined while assembling the contracted graph
    std::int64_t cpp_scan = 0;          // edges examined by the single C'' pass
    std::int64_t report_reads = 0;      // per-failed-element sink/min reads

    std::int64_t phase2_total() const {
        return partition_scans + partition_inserts + sweep_nodes + sweep_scans +
               sweep_pushes + classify_ops + gtilde_scans + cpp_scan + report_reads;
    }
};

// How many times each pipeline stage ran; a full solve must leave every
// field at exactly 1 (edge and node answers come from one shared pass).
struct StageCounts {
    int ts_builds = 0;
    int tt_builds = 0;
    int labelings = 0;
    int dag_builds = 0;
    int dag_sweeps = 0;
    int gtilde_builds = 0;
    int gtilde_spts = 0;
};

} // namespace rsp

#endif
