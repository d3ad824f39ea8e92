// helpers.hpp - independent oracles and builders shared by the test suites.
//
// Everything here recomputes results from first principles (Bellman-Ford,
// exhaustive enumeration, explicit subtree walks) precisely so it cannot
// share a bug with the implementation under test.

#ifndef RSP_TEST_HELPERS_HPP
#define RSP_TEST_HELPERS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "rsp/graph.hpp"
#include "rsp/random_graphs.hpp"
#include "rsp/rsp_dag.hpp"
#include "rsp/spt.hpp"

namespace rsp::testing {

Graph make_graph(int n, const std::vector<Edge>& edges, int s, int t);

// Distances by |V|-1 rounds of relaxation; optional masks mirror the oracle.
std::vector<Weight> bellman_ford(const Graph& g, int root, int masked_edge = -1,
                                 int masked_vertex = -1);

// Min over all simple s-t paths by exhaustive DFS; only for tiny graphs.
std::optional<Weight> enumerate_shortest(const Graph& g, int masked_edge = -1,
                                         int masked_vertex = -1);

// Subtree membership oracle: entry/exit times from an explicit traversal.
struct SubtreeTimes {
    std::vector<int> tin;
    std::vector<int> tout;
    bool in_subtree(int root_of_subtree, int v) const {
        return tin[static_cast<size_t>(root_of_subtree)] <= tin[static_cast<size_t>(v)] &&
               tin[static_cast<size_t>(v)] <= tout[static_cast<size_t>(root_of_subtree)];
    }
};
SubtreeTimes subtree_times(const ShortestPathTree& tree);

// Brute-force Eq-style scan: cheapest non-tree candidate with
// label(x) <= max_x and label(y) >= min_y, ties to the smaller edge id.
std::optional<CandidateEdge> brute_min_crossing(const Graph& g, const ShortestPathTree& ts,
                                                const ShortestPathTree& tt,
                                                const PathLabeling& lab, int max_x, int min_y);

void for_each_random_graph(int count, std::uint64_t seed,
                           const std::function<void(const Graph&, int)>& fn);
void for_each_random_graph(int count, std::uint64_t seed, const CorpusParams& params,
                           const std::function<void(const Graph&, int)>& fn);

} // namespace rsp::testing

#endif
