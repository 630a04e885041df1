#include "rlab/properties.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/spectra.hpp"

namespace rlab {

namespace {

std::vector<int> mask_to_set(uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.first] |= 1u << e.second;
        adj[e.second] |= 1u << e.first;
    }
    return adj;
}

int edges_inside(const Graph& g, const std::vector<int>& set) {
    int count = 0;
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) ++count;
    return count;
}

std::vector<int> external_neighbourhood(const Graph& g, const std::vector<int>& set) {
    std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : set) in[v] = 1;
    std::vector<int> out;
    for (int v : set)
        for (int w : g.neighbours(v))
            if (!in[w] && !seen[w]) { seen[w] = 1; out.push_back(w); }
    std::sort(out.begin(), out.end());
    return out;
}

bool sparse_violates(const Graph& g, const std::vector<int>& set, double x, double y) {
    double a = static_cast<double>(set.size());
    return a >= 1 && a <= std::floor(x) && edges_inside(g, set) > a * y;
}

std::vector<int> random_subset(Rng& rng, int n, int size) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    rng.shuffle(all);
    all.resize(std::min<size_t>(size, all.size()));
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

PropertyVerdict is_sparse(const Graph& g, double x, double y, CheckMode mode,
                          uint64_t seed, uint64_t budget) {
    require(x >= 1, "StructuralError", "sparsity bound x must be at least 1");
    int n = g.vertex_count();
    int xcap = static_cast<int>(std::floor(x));
    bool exact = (mode == CheckMode::Exact) ||
                 (mode == CheckMode::Auto && n <= kSparseExactLimit);
    if (mode == CheckMode::Exact)
        require(n <= kSparseExactLimit, "TooLarge", "exact sparsity check capped at n <= 18");

    PropertyVerdict v;
    if (exact) {
        v.exact = true;
        auto adj = adjacency_masks(g);
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            int a = __builtin_popcount(mask);
            if (a > xcap) continue;
            int e2 = 0;
            for (uint32_t rest = mask; rest;) {
                int w = __builtin_ctz(rest);
                rest &= rest - 1;
                e2 += __builtin_popcount(adj[w] & mask);
            }
            if (e2 / 2 > a * y) {
                v.kind = VerdictKind::Violated;
                v.witness_a = mask_to_set(mask);
                return v;
            }
        }
        v.kind = VerdictKind::Holds;
        return v;
    }

    // Hill-climb toward dense small sets from 64 random starts.
    Rng rng(seed, 0xA5);
    v.search_budget = budget;
    uint64_t steps = 0;
    for (int start = 0; start < 64 && steps < budget; ++start) {
        int size = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(std::min(n, xcap))));
        std::vector<int> cur = random_subset(rng, n, size);
        while (steps < budget) {
            ++steps;
            if (sparse_violates(g, cur, x, y)) {
                v.kind = VerdictKind::Violated;
                v.witness_a = cur;
                return v;
            }
            // try the best single-vertex change (add if room, else swap)
            int curEdges = edges_inside(g, cur);
            int bestGain = 0, bestAdd = -1, bestDrop = -1;
            std::vector<char> in(n, 0);
            for (int u : cur) in[u] = 1;
            for (int w = 0; w < n; ++w) {
                if (in[w]) continue;
                int gain = 0;
                for (int u : g.neighbours(w))
                    if (in[u]) ++gain;
                if (static_cast<int>(cur.size()) < xcap) {
                    if (gain > bestGain) { bestGain = gain; bestAdd = w; bestDrop = -1; }
                } else {
                    for (int u : cur) {
                        int loss = 0;
                        for (int z : g.neighbours(u))
                            if (in[z] && z != w) ++loss;
                        if (g.has_edge(u, w)) --gain; // edge between swapped pair
                        if (gain - loss > bestGain) {
                            bestGain = gain - loss;
                            bestAdd = w;
                            bestDrop = u;
                        }
                        if (g.has_edge(u, w)) ++gain;
                    }
                }
            }
            if (bestAdd < 0) break;
            if (bestDrop >= 0) cur.erase(std::find(cur.begin(), cur.end(), bestDrop));
            cur.push_back(bestAdd);
            std::sort(cur.begin(), cur.end());
            if (edges_inside(g, cur) <= curEdges && bestDrop >= 0) break; // stalled
        }
    }
    v.kind = VerdictKind::NoViolationFound;
    return v;
}

namespace {

PropertyVerdict connector_exact_masked(const std::vector<uint32_t>& adj, int n, int k,
                                       uint32_t side_a_mask, uint32_t side_b_mask) {
    PropertyVerdict v;
    v.exact = true;
    uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if ((mask & side_a_mask) != mask) continue;
        if (__builtin_popcount(mask) != k) continue;
        uint32_t nb = 0;
        for (uint32_t rest = mask; rest;) {
            int w = __builtin_ctz(rest);
            rest &= rest - 1;
            nb |= adj[w];
        }
        uint32_t avail = full & side_b_mask & ~(mask | nb);
        if (__builtin_popcount(avail) >= k) {
            v.kind = VerdictKind::Violated;
            v.witness_a = mask_to_set(mask);
            std::vector<int> b = mask_to_set(avail);
            b.resize(k);
            v.witness_b = b;
            return v;
        }
    }
    v.kind = VerdictKind::Holds;
    return v;
}

PropertyVerdict connector_search(const Graph& g, int k, const std::vector<int>& poolA,
                                 const std::vector<int>& poolB, uint64_t seed,
                                 uint64_t budget) {
    // Random k-sets on side A, then greedily shrink the exposed neighbourhood.
    PropertyVerdict v;
    v.search_budget = budget;
    Rng rng(seed, 0xC0);
    int n = g.vertex_count();
    std::vector<char> inA(n, 0);
    for (uint64_t it = 0; it < budget / std::max(1, k); ++it) {
        std::vector<int> a;
        {
            std::vector<int> pool = poolA;
            rng.shuffle(pool);
            pool.resize(std::min<size_t>(k, pool.size()));
            if (static_cast<int>(pool.size()) < k) break;
            a = pool;
        }
        std::fill(inA.begin(), inA.end(), 0);
        for (int u : a) inA[u] = 1;
        std::vector<char> blocked(n, 0);
        for (int u : a) {
            blocked[u] = 1;
            for (int w : g.neighbours(u)) blocked[w] = 1;
        }
        std::vector<int> b;
        for (int w : poolB)
            if (!blocked[w] && !inA[w]) b.push_back(w);
        if (static_cast<int>(b.size()) >= k) {
            b.resize(k);
            std::sort(a.begin(), a.end());
            v.kind = VerdictKind::Violated;
            v.witness_a = a;
            v.witness_b = b;
            return v;
        }
    }
    v.kind = VerdictKind::NoViolationFound;
    return v;
}

} // namespace

PropertyVerdict is_connector(const Graph& g, int k, CheckMode mode, uint64_t seed,
                             uint64_t budget) {
    require(k >= 1, "StructuralError", "connector level must be at least 1");
    int n = g.vertex_count();
    bool exact = (mode == CheckMode::Exact) ||
                 (mode == CheckMode::Auto && n <= kConnectorExactLimit);
    if (mode == CheckMode::Exact)
        require(n <= kConnectorExactLimit, "TooLarge", "exact connector check capped at n <= 16");
    if (exact) {
        uint32_t full = (1u << n) - 1;
        return connector_exact_masked(adjacency_masks(g), n, k, full, full);
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return connector_search(g, k, all, all, seed, budget);
}

PropertyVerdict is_bi_connector(const BipartiteGraph& bg, int k, CheckMode mode,
                                uint64_t seed, uint64_t budget) {
    require(k >= 1, "StructuralError", "connector level must be at least 1");
    const Graph& g = bg.graph;
    int n = g.vertex_count();
    bool exact = (mode == CheckMode::Exact) ||
                 (mode == CheckMode::Auto && n <= kConnectorExactLimit);
    if (mode == CheckMode::Exact)
        require(n <= kConnectorExactLimit, "TooLarge", "exact bi-connector check capped at n <= 16");
    if (exact) {
        uint32_t maskA = 0, maskB = 0;
        for (int v : bg.part_a.members()) maskA |= 1u << v;
        for (int v : bg.part_b.members()) maskB |= 1u << v;
        return connector_exact_masked(adjacency_masks(g), n, k, maskA, maskB);
    }
    return connector_search(g, k, bg.part_a.members(), bg.part_b.members(), seed, budget);
}

PropertyVerdict is_expander(const Graph& g, int r, CheckMode mode, uint64_t seed,
                            uint64_t budget) {
    require(r >= 1, "StructuralError", "expansion level must be at least 1");
    int n = g.vertex_count();
    bool exact = (mode == CheckMode::Exact) ||
                 (mode == CheckMode::Auto && n <= kExpanderExactLimit);
    if (mode == CheckMode::Exact)
        require(n <= kExpanderExactLimit, "TooLarge", "exact expander check capped at n <= 16");

    PropertyVerdict v;
    if (exact) {
        v.exact = true;
        auto adj = adjacency_masks(g);
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            int a = __builtin_popcount(mask);
            if (a > r) continue;
            uint32_t nb = 0;
            for (uint32_t rest = mask; rest;) {
                int w = __builtin_ctz(rest);
                rest &= rest - 1;
                nb |= adj[w];
            }
            if (__builtin_popcount(nb & ~mask) < 2 * a) {
                v.kind = VerdictKind::Violated;
                v.witness_a = mask_to_set(mask);
                return v;
            }
        }
        v.kind = VerdictKind::Holds;
        return v;
    }

    // hill-climb toward small external boundaries from 64 random starts
    Rng rng(seed, 0xE1);
    v.search_budget = budget;
    uint64_t steps = 0;
    for (int start = 0; start < 64 && steps < budget; ++start) {
        int size = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(std::min(n, r))));
        std::vector<int> a = random_subset(rng, n, size);
        for (;;) {
            ++steps;
            int boundary = static_cast<int>(external_neighbourhood(g, a).size());
            if (boundary < 2 * static_cast<int>(a.size())) {
                v.kind = VerdictKind::Violated;
                v.witness_a = a;
                return v;
            }
            if (steps >= budget) break;
            int bestBoundary = boundary, bestOut = -1, bestIn = -1;
            std::vector<char> in(n, 0);
            for (int u : a) in[u] = 1;
            for (int w = 0; w < n; ++w) {
                if (in[w]) continue;
                for (size_t i = 0; i < a.size(); ++i) {
                    std::vector<int> trial = a;
                    trial[i] = w;
                    std::sort(trial.begin(), trial.end());
                    int b = static_cast<int>(external_neighbourhood(g, trial).size());
                    if (b < bestBoundary) {
                        bestBoundary = b;
                        bestOut = static_cast<int>(i);
                        bestIn = w;
                    }
                }
            }
            if (bestOut < 0) break; // local minimum
            a[bestOut] = bestIn;
            std::sort(a.begin(), a.end());
        }
    }
    v.kind = VerdictKind::NoViolationFound;
    return v;
}

std::pair<double, double> jumbled_certificate_regular(const Graph& g) {
    int n = g.vertex_count();
    require(n >= 2, "NotRegular", "need at least two vertices");
    int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        require(g.degree(v) == k, "NotRegular", "graph is not regular");
    SymMatrix A = SymMatrix::Zero(n, n);
    for (const Edge& e : g.edges()) {
        A(e.first, e.second) = 1.0;
        A(e.second, e.first) = 1.0;
    }
    Spectrum s = eigenvalues_sym(A);
    double second_largest = s.values[static_cast<size_t>(n - 2)];
    double smallest = s.values[0];
    double lambda = std::max(std::fabs(second_largest), std::fabs(smallest));
    return {static_cast<double>(k) / n, lambda};
}

namespace {

bool try_augment(const Graph& g, int u, const std::vector<char>& is_right,
                 std::vector<int>& match, std::vector<char>& visited) {
    for (int w : g.neighbours(u)) {
        if (!is_right[w] || visited[w]) continue;
        visited[w] = 1;
        if (match[w] < 0 || try_augment(g, match[w], is_right, match, visited)) {
            match[w] = u;
            return true;
        }
    }
    return false;
}

std::vector<Edge> matching_on(const Graph& g, const std::vector<int>& left,
                              const std::vector<int>& right) {
    std::vector<char> is_right(g.vertex_count(), 0);
    for (int v : right) is_right[v] = 1;
    std::vector<int> match(g.vertex_count(), -1);
    for (int u : left) {
        std::vector<char> visited(g.vertex_count(), 0);
        try_augment(g, u, is_right, match, visited);
    }
    std::vector<Edge> out;
    for (int w : right)
        if (match[w] >= 0) out.push_back(make_edge(match[w], w));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Edge> max_matching(const BipartiteGraph& bg) {
    return matching_on(bg.graph, bg.part_a.members(), bg.part_b.members());
}

std::vector<Edge> max_matching_pair(const Graph& g, const VertexSubset& a,
                                    const VertexSubset& b) {
    require(a.disjoint_from(b), "PartialOverlap", "matching sides must be disjoint");
    InducedSubgraph sub = induced_pair(g, a, b);
    std::vector<int> left, right;
    for (size_t i = 0; i < sub.vertices.size(); ++i) {
        if (a.contains(sub.vertices[i])) left.push_back(static_cast<int>(i));
        else right.push_back(static_cast<int>(i));
    }
    std::vector<Edge> local = matching_on(sub.graph, left, right);
    std::vector<Edge> out;
    for (const Edge& e : local)
        out.push_back(make_edge(sub.vertices[e.first], sub.vertices[e.second]));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rlab
