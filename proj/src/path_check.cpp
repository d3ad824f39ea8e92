#include "rsp/path_check.hpp"

#include <unordered_set>

namespace rsp {

WalkCheck check_replacement_path(const Graph& g, const std::vector<int>& path,
                                 std::optional<int> masked_edge,
                                 std::optional<int> masked_vertex, Weight expected) {
    auto fail = [](std::string why) { return WalkCheck{false, std::move(why)}; };
    if (path.size() < 2) return fail("path has fewer than two vertices");
    if (path.front() != g.source()) return fail("path does not start at s");
    if (path.back() != g.target()) return fail("path does not end at t");

    std::unordered_set<int> seen;
    for (int v : path) {
        if (v < 0 || v >= g.vertex_count()) return fail("vertex id out of range");
        if (masked_vertex && v == *masked_vertex) return fail("path visits the failed vertex");
        if (!seen.insert(v).second) return fail("path repeats a vertex");
    }

    Weight total = 0;
    for (size_t k = 0; k + 1 < path.size(); ++k) {
        const int a = path[k];
        const int b = path[k + 1];
        Weight best = kInf;
        for (auto [to, id] : g.neighbors(a)) {
            if (to != b) continue;
            if (masked_edge && id == *masked_edge) continue;
            if (g.edge(id).w < best) best = g.edge(id).w;
        }
        if (!(best < kInf)) return fail("consecutive vertices not connected");
        total += best;
    }
    if (total != expected) return fail("path weight does not match the reported distance");
    return WalkCheck{true, {}};
}

} // namespace rsp
