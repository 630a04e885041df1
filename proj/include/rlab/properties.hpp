#pragma once

#include <cstdint>
#include <vector>

#include "rlab/graph.hpp"
#include "rlab/rng.hpp"

namespace rlab {

enum class VerdictKind { Holds, Violated, NoViolationFound };
enum class CheckMode { Auto, Exact, RandomSearch };

// Holds is only ever produced in exact mode. Violated always carries a
// witness that re-checks against the raw definition.
struct PropertyVerdict {
    VerdictKind kind = VerdictKind::NoViolationFound;
    bool exact = false;
    uint64_t search_budget = 0;
    std::vector<int> witness_a;
    std::vector<int> witness_b; // connector witnesses come in pairs

    bool holds_or_unrefuted() const { return kind != VerdictKind::Violated; }
};

constexpr int kSparseExactLimit = 18;
constexpr int kConnectorExactLimit = 16;
constexpr int kExpanderExactLimit = 16;
constexpr uint64_t kDefaultSearchBudget = 20000;

// (x,y)-sparse: every A with |A| = a <= x spans at most a*y edges. x is floored.
PropertyVerdict is_sparse(const Graph& g, double x, double y,
                          CheckMode mode = CheckMode::Auto,
                          uint64_t seed = 1, uint64_t budget = kDefaultSearchBudget);

// K-connector: every two disjoint vertex sets of size >= k are joined by an edge.
PropertyVerdict is_connector(const Graph& g, int k, CheckMode mode = CheckMode::Auto,
                             uint64_t seed = 1, uint64_t budget = kDefaultSearchBudget);

// K-bi-connector: every A ⊆ side A and B ⊆ side B of size >= k are joined.
PropertyVerdict is_bi_connector(const BipartiteGraph& bg, int k,
                                CheckMode mode = CheckMode::Auto,
                                uint64_t seed = 1, uint64_t budget = kDefaultSearchBudget);

// R-expander: every A with |A| <= r has |N(A)| >= 2|A|.
PropertyVerdict is_expander(const Graph& g, int r, CheckMode mode = CheckMode::Auto,
                            uint64_t seed = 1, uint64_t budget = kDefaultSearchBudget);

// For a k-regular graph returns (k/n, max(|lambda_2|, |lambda_n|)): a
// jumbledness certificate via the expander mixing bound.
std::pair<double, double> jumbled_certificate_regular(const Graph& g);

// Maximum matching by augmenting paths, edges in host labels.
std::vector<Edge> max_matching(const BipartiteGraph& bg);

// Maximum matching of G[a,b] for disjoint a, b, in host labels.
std::vector<Edge> max_matching_pair(const Graph& g, const VertexSubset& a,
                                    const VertexSubset& b);

} // namespace rlab
