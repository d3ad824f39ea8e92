// random_graphs.hpp - seeded instance generators for tests and the CLI.

#ifndef RSP_RANDOM_GRAPHS_HPP
#define RSP_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>

#include "rsp/graph.hpp"

namespace rsp {

struct CorpusParams {
    int count = 500;
    int min_n = 5;
    int max_n = 60;
    long min_m = -1; // -1: n-1
    long max_m = -1; // -1: n(n-1)/2
    int min_w = 1;
    int max_w = 100;
    std::uint64_t seed = 42;
};

// Connected multigraph: random spanning tree plus extra edges (parallels
// allowed, no self-loops). m is drawn log-uniformly across its range so the
// corpus covers sparse and dense instances alike. s and t are random and
// distinct. Fully determined by the rng state.
Graph random_connected_graph(std::mt19937_64& rng, const CorpusParams& p);

// Scaling family for the work-bound check: n = 2^k vertices on a weight-2
// path with weight-(2g-1) chords at stride g = 2^(k/2). The shortest path
// rides the chords and then the tail, so l = n/g + g - 2 ~ sqrt(n) while
// m ~ n: quadratic-in-l work stays visible against m without drowning it.
Graph path_with_chords(int k);

} // namespace rsp

#endif
