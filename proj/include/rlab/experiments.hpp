#pragma once

#include <cstdint>
#include <functional>

#include <json.hpp>

#include "rlab/graph.hpp"
#include "rlab/partition.hpp"
#include "rlab/rigidity.hpp"

namespace rlab {

// Worker count: RIGIDITYLAB_THREADS if set, else the hardware concurrency.
int worker_count();

// Deterministic fan-out: item i writes only into its own slot, so results do
// not depend on scheduling.
void parallel_for(int items, const std::function<void(int)>& fn);

// Each kernel is a pure function of its parameter block (wall_ms aside).

// Complete bipartite table: the certificate verdict on K_{m,n} versus the
// m,n >= d+1 and m+n >= C(d+2,2) characterization, for 2 <= m <= n <= max_mn,
// 1 <= d <= max_d. Mismatched cells are retried three times before counting.
nlohmann::json bipartite_table_experiment(int max_mn, int max_d, uint64_t seed);

// Rigidity of K_n minus a perfect matching versus n-1-floor(sqrt(n)+1/2).
nlohmann::json hyperoctahedral_experiment(int max_n, int trials, uint64_t seed);

// Accepted partitions from CDS / type-I / type-II / bipartite sources on
// random graphs, each run through the spectral bound check.
nlohmann::json bound_survey_experiment(int count, uint64_t seed, double tol,
                                       int restriction_cap = 20);

// G(n, tau_d) certificate at dimension d over seeded process runs.
nlohmann::json hitting_time_experiment(int n, int d, int trials, uint64_t seed);

// Greedy rigid growth on G(n, C d log d / n).
nlohmann::json giant_experiment(int n, int d, double C, int trials, uint64_t seed);

// Small-n suites for the sparse/expander/connector/jumbledness and matching
// matching implications; reports counterexample counts (zero on a sound build).
nlohmann::json implication_suite_experiment(uint64_t seed);

// Backtracking verifier vs the all-subsets oracle on random colourings with
// small parts; counts cases where the oracle passes but the search rejects.
nlohmann::json oracle_agreement_experiment(int cases, uint64_t seed);

} // namespace rlab
