// graph.hpp - undirected weighted multigraph, parsing and validation.
//
// Vertices are 0-based internally. Parallel edges are kept (each edge id is
// an independent object); self-loops are dropped at parse time since no
// shortest path uses one under positive weights.

#ifndef RSP_GRAPH_HPP
#define RSP_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsp {

using Weight = double;
constexpr Weight kInf = std::numeric_limits<Weight>::infinity();

struct Edge {
    int u;
    int v;
    Weight w;
};

// Thrown for malformed input text; line is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class Graph {
public:
    // Validates and builds adjacency. Throws std::invalid_argument on
    // non-positive/non-finite weights, self-loops, ids out of range or s == t.
    Graph(int n, std::vector<Edge> edges, int source, int target);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int source() const { return source_; }
    int target() const { return target_; }

    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Adjacency entries are (neighbor, edge id), in edge-insertion order.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adj_[static_cast<size_t>(v)];
    }

    // Endpoint of `id` that is not `from`.
    int other_endpoint(int id, int from) const {
        const Edge& e = edges_[static_cast<size_t>(id)];
        return e.u == from ? e.v : e.u;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    int source_;
    int target_;
};

enum class GraphFormat { kDimacs, kEdgeList };

struct ParseResult {
    Graph graph;
    int dropped_self_loops = 0; // warning count
    int id_base = 0;            // 1 for DIMACS input, 0 for edge lists
};

// source/target are given in the format's external id base (DIMACS: 1-based).
// Throws ParseError on malformed text, non-positive weights, out-of-range ids.
ParseResult parse_graph(std::istream& in, GraphFormat format, long source, long target);

// Inverse of parse_graph for round-trip checks; emits edges in id order.
std::string serialize_graph(const Graph& g, GraphFormat format);

// True iff target is reachable from source.
bool validate_reachability(const Graph& g);

} // namespace rsp

#endif
