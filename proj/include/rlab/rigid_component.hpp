#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlab/graph.hpp"
#include "rlab/rigidity.hpp"

namespace rlab {

// Log of a greedy d-rigid growth: a (d+1)-clique seed, then vertices with at
// least d neighbours inside the set (zero-extension) and merges with other
// grown sets sharing at least d vertices (glue). The final set is re-checked
// by the randomized rank certificate; the growth rules themselves are only a
// heuristic lower bound.
struct GrowthTrace {
    std::vector<int> seed_clique;
    std::vector<std::pair<int, std::string>> additions; // (vertex, "zero-extension"|"glue")
    std::vector<int> final_set;
    RigidityVerdict verdict;
    bool validated = false;
};

GrowthTrace greedy_rigid_closure(const Graph& g, int d, uint64_t seed,
                                 int validation_trials = 3);

std::string growth_trace_to_json(const GrowthTrace& t);

} // namespace rlab
