// oracle.hpp - brute-force ground truth: re-run Dijkstra per removal.
//
// Deliberately naive (O(l) full SPT rebuilds) and implemented with its own
// masked Dijkstra, independent of the spt module, so the two routes can
// disagree only if one of them is wrong.

#ifndef RSP_ORACLE_HPP
#define RSP_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsp/graph.hpp"
#include "rsp/rsp_dag.hpp"

namespace rsp {

struct OracleReport {
    FailedKind kind = FailedKind::kEdge;
    int index = 0;
    std::optional<Weight> distance;
    std::vector<int> path; // empty when unreachable
};

// Shortest s-t distance with one edge id masked (parallel edges keep their
// own ids, so masking is exact). Precondition: the edge lies on P_G(s,t);
// throws std::invalid_argument otherwise.
OracleReport oracle_edge(const Graph& g, int edge_id);

// Same with a vertex and all incident edges masked. Precondition: the vertex
// is internal on P_G(s,t).
OracleReport oracle_node(const Graph& g, int vertex);

struct CompareMismatch {
    FailedKind kind;
    int index;
    std::optional<Weight> fast;
    std::optional<Weight> oracle;
    std::string what;
};

struct CompareSummary {
    int edge_checks = 0;
    int node_checks = 0;
    int cpp_wins = 0; // internal vertices where the C'' term strictly won
    std::vector<CompareMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Runs the fast pipeline and the oracle over every e_i and internal v_i.
// Distances are compared for exact equality; every finite fast path is
// validated independently (paths may differ from the oracle's under ties).
CompareSummary compare_all(const Graph& g);

} // namespace rsp

#endif
