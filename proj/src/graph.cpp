#include "rsp/graph.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <queue>
#include <sstream>

namespace rsp {

Graph::Graph(int n, std::vector<Edge> edges, int source, int target)
    : n_(n), edges_(std::move(edges)), source_(source), target_(target) {
    if (n_ <= 0) throw std::invalid_argument("graph needs at least one vertex");
    if (source_ < 0 || source_ >= n_) throw std::invalid_argument("source id out of range");
    if (target_ < 0 || target_ >= n_) throw std::invalid_argument("target id out of range");
    if (source_ == target_) throw std::invalid_argument("source and target must differ");

    adj_.assign(static_cast<size_t>(n_), {});
    for (size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loops are not storable");
        if (!(e.w > 0) || !std::isfinite(e.w))
            throw std::invalid_argument("edge weights must be positive and finite");
        adj_[static_cast<size_t>(e.u)].emplace_back(e.v, static_cast<int>(id));
        adj_[static_cast<size_t>(e.v)].emplace_back(e.u, static_cast<int>(id));
    }
}

namespace {

bool parse_weight(const std::string& tok, Weight& out) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + tok.size() && std::isfinite(out);
}

bool parse_long(const std::string& tok, long& out) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    out = std::strtol(begin, &end, 10);
    return end == begin + tok.size();
}

} // namespace

ParseResult parse_graph(std::istream& in, GraphFormat format, long source, long target) {
    const int base = format == GraphFormat::kDimacs ? 1 : 0;
    std::vector<Edge> edges;
    int dropped = 0;
    long n = -1;
    long max_seen = -1;
    std::string line;
    int lineno = 0;

    auto check_vertex = [&](long ext, int at) -> int {
        const long v = ext - base;
        if (v < 0 || (n >= 0 && v >= n))
            throw ParseError(at, "vertex id out of range: " + std::to_string(ext));
        if (v > max_seen) max_seen = v;
        return static_cast<int>(v);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank

        if (format == GraphFormat::kDimacs) {
            if (tok == "c") continue;
            if (tok == "p") {
                if (n >= 0) throw ParseError(lineno, "duplicate problem line");
                std::string kind;
                long m = 0;
                if (!(ls >> kind >> n >> m) || kind != "sp" || n <= 0)
                    throw ParseError(lineno, "malformed problem line");
                continue;
            }
            if (tok != "a") throw ParseError(lineno, "unknown line type '" + tok + "'");
            if (n < 0) throw ParseError(lineno, "edge line before problem line");
        } else {
            ls.clear();
            ls.seekg(0);
        }

        long ue = 0, ve = 0;
        std::string wt;
        std::string su, sv;
        if (!(ls >> su >> sv >> wt) || !parse_long(su, ue) || !parse_long(sv, ve))
            throw ParseError(lineno, "malformed edge line");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens on edge line");

        Weight w;
        if (!parse_weight(wt, w)) throw ParseError(lineno, "malformed weight '" + wt + "'");
        if (w <= 0) throw ParseError(lineno, "weight <= 0");

        const int u = check_vertex(ue, lineno);
        const int v = check_vertex(ve, lineno);
        if (u == v) {
            ++dropped; // self-loop: warn, never store
            continue;
        }
        edges.push_back(Edge{u, v, w});
    }

    if (format == GraphFormat::kDimacs && n < 0)
        throw ParseError(0, "missing problem line");
    if (format == GraphFormat::kEdgeList) n = max_seen + 1;

    if (source < base || target < base)
        throw ParseError(0, "missing or invalid source/target designation");
    const long s = source - base;
    const long t = target - base;
    if (s >= n || t >= n) throw ParseError(0, "source/target id out of range");
    if (s == t) throw ParseError(0, "source and target must differ");

    // n covers s/t even if they are isolated in an edge list.
    ParseResult r{Graph(static_cast<int>(n), std::move(edges), static_cast<int>(s),
                        static_cast<int>(t)),
                  dropped, base};
    return r;
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    out.precision(17);
    const int base = format == GraphFormat::kDimacs ? 1 : 0;
    auto put_weight = [&](Weight w) {
        if (w == static_cast<Weight>(static_cast<long long>(w)))
            out << static_cast<long long>(w);
        else
            out << w;
    };
    if (format == GraphFormat::kDimacs)
        out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        if (format == GraphFormat::kDimacs) out << "a ";
        out << e.u + base << ' ' << e.v + base << ' ';
        put_weight(e.w);
        out << '\n';
    }
    return out.str();
}

bool validate_reachability(const Graph& g) {
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    q.push(g.source());
    seen[static_cast<size_t>(g.source())] = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (u == g.target()) return true;
        for (auto [to, id] : g.neighbors(u)) {
            (void)id;
            if (!seen[static_cast<size_t>(to)]) {
                seen[static_cast<size_t>(to)] = 1;
                q.push(to);
            }
        }
    }
    return false;
}

} // namespace rsp
