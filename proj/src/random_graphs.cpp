#include "rsp/random_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsp {

namespace {

// Bounded draw via modulo: bias is irrelevant here and the result depends
// only on the engine, not on the standard library's distribution details.
long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

long draw_log_uniform(std::mt19937_64& rng, long lo, long hi) {
    if (lo >= hi) return lo;
    const double a = std::log(static_cast<double>(lo));
    const double b = std::log(static_cast<double>(hi));
    const double u = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0); // [0,1)
    const long v = static_cast<long>(std::llround(std::exp(a + (b - a) * u)));
    return std::clamp(v, lo, hi);
}

} // namespace

Graph random_connected_graph(std::mt19937_64& rng, const CorpusParams& p) {
    const int n = static_cast<int>(draw(rng, p.min_n, p.max_n));
    const long tree_edges = n - 1;
    const long full = static_cast<long>(n) * (n - 1) / 2;
    long lo = p.min_m >= 0 ? std::max(p.min_m, tree_edges) : tree_edges;
    long hi = p.max_m >= 0 ? std::min(p.max_m, full) : full;
    if (hi < lo) hi = lo;
    // Three density tiers. Near-tree instances keep shortest paths long
    // (extra edges act as shortcuts, so only a handful are added) and
    // produce unreachable failures; the middle tier has deep forests where
    // the C'' route wins; the full tier covers dense graphs.
    const long near_tree = tree_edges + std::max(1L, static_cast<long>(n) / 8);
    long m = 0;
    switch (rng() % 3) {
        case 0: m = draw_log_uniform(rng, lo, std::min(hi, near_tree)); break;
        case 1: m = draw_log_uniform(rng, lo, std::min(hi, 2 * tree_edges)); break;
        default: m = draw_log_uniform(rng, lo, hi); break;
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    auto weight = [&] { return static_cast<Weight>(draw(rng, p.min_w, p.max_w)); };

    // Random spanning tree over a random vertex order, then extra edges;
    // parallels allowed, self-loops not. Uniform attachment gives log-depth
    // trees and short shortest paths, so a per-graph chain bias mixes in
    // path-like trees where l grows to Theta(n).
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(draw(rng, 0, i))]);
    const int chain_percent = static_cast<int>(draw(rng, 0, 2)) * 45; // 0, 45 or 90
    for (int i = 1; i < n; ++i) {
        const int u = order[static_cast<size_t>(i)];
        const bool chain = draw(rng, 0, 99) < chain_percent;
        const int v = chain ? order[static_cast<size_t>(i - 1)]
                            : order[static_cast<size_t>(draw(rng, 0, i - 1))];
        edges.push_back(Edge{u, v, weight()});
    }
    while (static_cast<long>(edges.size()) < m) {
        const int u = static_cast<int>(draw(rng, 0, n - 1));
        const int v = static_cast<int>(draw(rng, 0, n - 1));
        if (u == v) continue;
        edges.push_back(Edge{u, v, weight()});
    }

    const int s = static_cast<int>(draw(rng, 0, n - 1));
    int t = static_cast<int>(draw(rng, 0, n - 2));
    if (t >= s) ++t;
    return Graph(n, std::move(edges), s, t);
}

Graph path_with_chords(int k) {
    if (k < 2) throw std::invalid_argument("path_with_chords needs k >= 2");
    const int n = 1 << k;
    const int g = 1 << (k / 2);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1, 2.0});
    // Chord (jg, (j+1)g) undercuts the g path edges it spans by 1, so the
    // shortest 0 -> n-1 path hops the chords and walks the tail.
    for (int j = 0; (j + 1) * g <= n - 1; ++j)
        edges.push_back(Edge{j * g, (j + 1) * g, 2.0 * g - 1.0});
    return Graph(n, std::move(edges), 0, n - 1);
}

} // namespace rsp
