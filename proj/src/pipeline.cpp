#include "rsp/pipeline.hpp"

#include <stdexcept>

namespace rsp {

Solution solve(const Graph& g) {
    if (!validate_reachability(g))
        throw std::invalid_argument("target unreachable from source");

    Solution sol;
    sol.ts = dijkstra(g, g.source());
    ++sol.stages.ts_builds;
    sol.tt = dijkstra(g, g.target());
    ++sol.stages.tt_builds;

    const TreePath path = extract_path(sol.ts, g.target());
    sol.labeling = compute_labels(sol.ts, path);
    ++sol.stages.labelings;

    sol.dag = partition_candidates(g, sol.ts, sol.tt, sol.labeling, &sol.ops);
    ++sol.stages.dag_builds;
    build_and_sweep(sol.dag, &sol.ops);
    ++sol.stages.dag_sweeps;

    const std::vector<int> forest = classify_forest(sol.labeling);
    sol.ops.classify_ops += static_cast<std::int64_t>(forest.size());
    sol.gtilde = build_contracted_graph(g, sol.ts, sol.labeling, forest, &sol.ops);
    ++sol.stages.gtilde_builds;
    sol.partial = partial_distances(sol.gtilde, g.source(), &sol.ops);
    ++sol.stages.gtilde_spts;

    sol.edge_reports = edge_replacements(sol.dag, &sol.ops);
    sol.node_reports = node_replacements(g, sol.ts, sol.tt, sol.labeling, sol.dag, sol.gtilde,
                                         sol.partial, &sol.ops);
    return sol;
}

} // namespace rsp
