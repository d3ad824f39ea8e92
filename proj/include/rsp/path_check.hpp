// path_check.hpp - independent validation of reported replacement paths.

#ifndef RSP_PATH_CHECK_HPP
#define RSP_PATH_CHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsp/graph.hpp"

namespace rsp {

struct WalkCheck {
    bool ok = false;
    std::string reason;
};

// Checks that `path` is a simple s-t walk in g minus the masked element and
// that its cheapest edge realization weighs exactly `expected`. Consecutive
// vertices are charged the minimum-weight surviving edge between them, so a
// pass means the reported distance is actually achieved by this vertex
// sequence and a cheaper realization would flag a wrong distance anyway.
WalkCheck check_replacement_path(const Graph& g, const std::vector<int>& path,
                                 std::optional<int> masked_edge,
                                 std::optional<int> masked_vertex, Weight expected);

} // namespace rsp

#endif
