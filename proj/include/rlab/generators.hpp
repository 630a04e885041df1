#pragma once

#include <cstdint>

#include "rlab/graph.hpp"
#include "rlab/rng.hpp"

namespace rlab {

// G(n,p): every pair independently with probability p.
Graph gnp(int n, double p, uint64_t seed);

// G(n,n,p) on sides [0,n) and [n,2n).
BipartiteGraph gnnp(int n, double p, uint64_t seed);

// Uniform graph with exactly m edges.
Graph gnm(int n, long long m, uint64_t seed);

// State of the random graph process at the hitting time for minimum degree d.
struct ProcessSnapshot {
    Graph graph;
    int degree_target = 0;
    long long tau = 0; // edges added
    Edge last_edge{-1, -1};
};

ProcessSnapshot process_hitting_time(int n, int d, uint64_t seed);

struct RegularSample {
    Graph graph;
    bool collapsed = false; // multigraph had loops or parallel edges
    int attempts = 0;
};

// Configuration model: uniform perfect matching on n*k half-edges projected
// onto n vertices. simple=true resamples until the projection is simple
// (uniform over simple k-regular graphs), capped at 100000 attempts.
RegularSample random_regular(int n, int k, uint64_t seed, bool simple);

} // namespace rlab
