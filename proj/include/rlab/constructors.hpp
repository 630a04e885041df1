#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rlab/graph.hpp"
#include "rlab/partition.hpp"
#include "rlab/rng.hpp"

namespace rlab {

struct PartitionRequest {
    int d = 2;
    double alpha = 1.0 / 7.0; // degree slack
    double beta = 0.5;        // balance slack
    uint64_t seed = 1;
    int max_retries = 200;
};

// Partition is returned only when every vertex has enough neighbours in
// every part (and, for the balanced variant, the class intersections are
// within the balance window). Failure is a value, never an error.
struct ConstructionOutcome {
    bool success = false;
    std::vector<std::vector<int>> parts;
    int attempts = 0;
    int best_min_cross_degree = 0; // best over attempts of min over (v, part)
};

// i.i.d. uniform assignment into d parts, retried until every vertex has at
// least (1-alpha)*delta/d neighbours in every part.
ConstructionOutcome random_partition(const Graph& g, const PartitionRequest& req);

// As random_partition, additionally requiring |V_i ∩ A_j| within
// (1±beta) n/(t d) for every part and class. Classes must have equal sizes.
ConstructionOutcome balanced_random_partition(const Graph& g, const PartitionRequest& req,
                                              const std::vector<VertexSubset>& classes);

struct StrongConstruction {
    bool success = false;
    StrongPartition partition;
    int attempts = 0;
};

// Random d-part split with the 1/7 degree slack, then a direct connectivity
// check of every G[V_i,V_j]; only verified partitions are returned.
StrongConstruction strong_partition_via_sparse_connector(const Graph& g, int d,
                                                         uint64_t seed,
                                                         int max_retries = 200);

// Size-balanced random split of both sides into d+1 parts; checks G[A_i,B_j]
// connected for i != j and a matching of size d in every G[A_i,B_i].
StrongConstruction bipartite_strong_partition(const BipartiteGraph& bg, int d,
                                              uint64_t seed, int max_retries = 200);

// Deterministic strong bipartite partition of K_{m,n}; valid exactly when
// m,n >= d+1 and m+n >= C(d+2,2).
StrongPartition complete_bipartite_partition(int m, int n, int d);

// Random near-equipartition into d parts retried until every vertex pair has
// a common neighbour in every part; the returned type-I partition is
// re-verified directly.
StrongConstruction common_neighbour_partition(const Graph& g, int d, uint64_t seed,
                                              int max_retries = 200);

struct DiracOutcome {
    int d = 0;            // dimension derived from the degree surplus
    double surplus = 0.0; // delta - n/2
    StrongConstruction construction;
};

// Minimum degree n/2 + s gives every pair at least 2s common neighbours;
// the wrapper derives d = floor(2s / (3 log n)) and delegates.
DiracOutcome dirac_strong_partition(const Graph& g, uint64_t seed, int max_retries = 200);

} // namespace rlab
