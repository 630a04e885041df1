#include "rlab/constructors.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/properties.hpp"

namespace rlab {

namespace {

std::vector<std::vector<int>> collect_parts(const std::vector<int>& assign, int d) {
    std::vector<std::vector<int>> parts(d);
    for (size_t v = 0; v < assign.size(); ++v) parts[assign[v]].push_back(static_cast<int>(v));
    return parts;
}

int min_cross_degree(const Graph& g, const std::vector<int>& assign, int d) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    int worst = n;
    std::vector<int> count(d);
    for (int v = 0; v < n; ++v) {
        std::fill(count.begin(), count.end(), 0);
        for (int w : g.neighbours(v)) ++count[assign[w]];
        for (int i = 0; i < d; ++i) worst = std::min(worst, count[i]);
    }
    return worst;
}

// Deal a shuffled vertex list round-robin: sizes differ by at most one.
std::vector<int> dealt_assignment(int n, int d, Rng& rng) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<int> assign(n, 0);
    for (int i = 0; i < n; ++i) assign[order[i]] = i % d;
    return assign;
}

} // namespace

ConstructionOutcome random_partition(const Graph& g, const PartitionRequest& req) {
    require(req.d >= 1, "StructuralError", "dimension must be at least 1");
    require(req.alpha > 0.0 && req.alpha < 1.0, "StructuralError", "alpha must lie in (0,1)");
    require(req.max_retries >= 1, "StructuralError", "need at least one attempt");

    const int n = g.vertex_count();
    const double target = (1.0 - req.alpha) * g.min_degree() / req.d;
    Rng master(req.seed, 31);

    ConstructionOutcome out;
    out.best_min_cross_degree = -1;
    for (int attempt = 1; attempt <= req.max_retries; ++attempt) {
        out.attempts = attempt;
        Rng rng(master.derive(attempt), 0);
        std::vector<int> assign(n);
        for (int v = 0; v < n; ++v)
            assign[v] = static_cast<int>(rng.next_below(static_cast<uint64_t>(req.d)));
        int worst = min_cross_degree(g, assign, req.d);
        out.best_min_cross_degree = std::max(out.best_min_cross_degree, worst);
        if (static_cast<double>(worst) >= target - 1e-12) {
            out.success = true;
            out.parts = collect_parts(assign, req.d);
            return out;
        }
    }
    return out;
}

ConstructionOutcome balanced_random_partition(const Graph& g, const PartitionRequest& req,
                                              const std::vector<VertexSubset>& classes) {
    require(req.d >= 1, "StructuralError", "dimension must be at least 1");
    const int n = g.vertex_count();
    const int t = static_cast<int>(classes.size());
    require(t >= 1, "UnequalClasses", "need at least one class");
    size_t class_size = classes[0].size();
    size_t covered = 0;
    for (const auto& c : classes) {
        require(c.size() == class_size, "UnequalClasses", "classes must have equal sizes");
        covered += c.size();
    }
    require(covered == static_cast<size_t>(n), "UnequalClasses",
            "classes must partition the vertex set");
    std::vector<int> class_of(n, -1);
    for (int ci = 0; ci < t; ++ci)
        for (int v : classes[ci].members()) {
            require(class_of[v] < 0, "UnequalClasses", "classes overlap");
            class_of[v] = ci;
        }

    const double target = (1.0 - req.alpha) * g.min_degree() / req.d;
    const double mean = static_cast<double>(n) / (t * req.d);
    Rng master(req.seed, 37);

    ConstructionOutcome out;
    out.best_min_cross_degree = -1;
    for (int attempt = 1; attempt <= req.max_retries; ++attempt) {
        out.attempts = attempt;
        Rng rng(master.derive(attempt), 0);
        std::vector<int> assign(n);
        for (int v = 0; v < n; ++v)
            assign[v] = static_cast<int>(rng.next_below(static_cast<uint64_t>(req.d)));
        int worst = min_cross_degree(g, assign, req.d);
        out.best_min_cross_degree = std::max(out.best_min_cross_degree, worst);
        if (static_cast<double>(worst) < target - 1e-12) continue;

        bool balanced = true;
        std::vector<std::vector<int>> inter(req.d, std::vector<int>(t, 0));
        for (int v = 0; v < n; ++v) ++inter[assign[v]][class_of[v]];
        for (int i = 0; i < req.d && balanced; ++i)
            for (int j = 0; j < t && balanced; ++j) {
                double c = inter[i][j];
                if (c < (1.0 - req.beta) * mean - 1e-12 ||
                    c > (1.0 + req.beta) * mean + 1e-12)
                    balanced = false;
            }
        if (!balanced) continue;
        out.success = true;
        out.parts = collect_parts(assign, req.d);
        return out;
    }
    return out;
}

StrongConstruction strong_partition_via_sparse_connector(const Graph& g, int d,
                                                         uint64_t seed, int max_retries) {
    require(d >= 2, "StructuralError", "type-I construction needs d >= 2");
    const int n = g.vertex_count();
    const double target = (1.0 - 1.0 / 7.0) * g.min_degree() / d;
    Rng master(seed, 41);

    StrongConstruction out;
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        out.attempts = attempt;
        Rng rng(master.derive(attempt), 0);
        std::vector<int> assign(n);
        for (int v = 0; v < n; ++v)
            assign[v] = static_cast<int>(rng.next_below(static_cast<uint64_t>(d)));
        if (static_cast<double>(min_cross_degree(g, assign, d)) < target - 1e-12) continue;

        StrongPartition sp;
        sp.kind = StrongKind::TypeI;
        sp.d = d;
        sp.parts = collect_parts(assign, d);
        if (verify_strong(g, sp)) {
            out.success = true;
            out.partition = std::move(sp);
            return out;
        }
    }
    return out;
}

StrongConstruction bipartite_strong_partition(const BipartiteGraph& bg, int d,
                                              uint64_t seed, int max_retries) {
    require(d >= 1, "StructuralError", "dimension must be at least 1");
    require(bg.part_a.size() == bg.part_b.size(), "UnequalClasses",
            "sides must have equal sizes");
    const Graph& g = bg.graph;
    const int k = d + 1;
    Rng master(seed, 43);

    StrongConstruction out;
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        out.attempts = attempt;
        Rng rng(master.derive(attempt), 0);

        // balanced split of each side separately
        std::vector<int> assign(g.vertex_count(), 0);
        for (const auto& side : {bg.part_a.members(), bg.part_b.members()}) {
            std::vector<int> order = side;
            rng.shuffle(order);
            for (size_t i = 0; i < order.size(); ++i)
                assign[order[i]] = static_cast<int>(i % k);
        }
        StrongPartition sp;
        sp.kind = StrongKind::Bipartite;
        sp.d = d;
        sp.side_a = bg.part_a;
        sp.parts = collect_parts(assign, k);
        bool empty = false;
        for (const auto& p : sp.parts) empty |= p.empty();
        if (empty) continue;
        if (!verify_strong(g, sp)) continue; // matching route: size-d matchings

        // materialize the matchings as forests with scores all d
        std::vector<char> in_a(g.vertex_count(), 0);
        for (int v : bg.part_a.members()) in_a[v] = 1;
        sp.forests.clear();
        sp.scores.assign(k, d);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            std::vector<int> A, B;
            for (int v : sp.parts[i]) (in_a[v] ? A : B).push_back(v);
            auto m = max_matching_pair(g, VertexSubset(A), VertexSubset(B));
            if (static_cast<int>(m.size()) < d) { ok = false; break; }
            m.resize(d);
            sp.forests.push_back(std::move(m));
        }
        if (!ok || !verify_strong(g, sp)) continue;
        out.success = true;
        out.partition = std::move(sp);
        return out;
    }
    return out;
}

StrongPartition complete_bipartite_partition(int m, int n, int d) {
    require(d >= 1, "StructuralError", "dimension must be at least 1");
    long long need = static_cast<long long>(d + 2) * (d + 1) / 2;
    require(m >= d + 1 && n >= d + 1 && m + n >= need, "ConditionViolated",
            "complete bipartite rigidity needs m,n >= d+1 and m+n >= C(d+2,2)");

    const int k = d + 1;
    std::vector<int> scores(k);
    for (int i = 0; i < k; ++i) scores[i] = (i < 3) ? 1 : i; // 1-based: s_i = i-1 for i > 3

    // Every part gets one vertex from each side; parts i >= 4 (1-based) are
    // topped up to s_i + 1 vertices; leftovers go to part 1.
    std::vector<std::vector<int>> parts(k);
    std::vector<int> poolA, poolB;
    for (int v = 0; v < m; ++v) poolA.push_back(v);
    for (int v = 0; v < n; ++v) poolB.push_back(m + v);
    for (int i = 0; i < k; ++i) {
        parts[i].push_back(poolA[i]);
        parts[i].push_back(poolB[i]);
    }
    poolA.erase(poolA.begin(), poolA.begin() + k);
    poolB.erase(poolB.begin(), poolB.begin() + k);
    std::vector<int> spare = poolA;
    spare.insert(spare.end(), poolB.begin(), poolB.end());
    size_t cursor = 0;
    for (int i = 3; i < k; ++i) {
        while (static_cast<int>(parts[i].size()) < scores[i] + 1) {
            require(cursor < spare.size(), "ConditionViolated", "vertex budget exhausted");
            parts[i].push_back(spare[cursor++]);
        }
    }
    while (cursor < spare.size()) parts[0].push_back(spare[cursor++]);
    for (auto& p : parts) std::sort(p.begin(), p.end());

    // Spanning-tree forests inside each complete bipartite block: a star from
    // the least A-vertex plus edges into the least B-vertex.
    std::vector<std::vector<Edge>> forests(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> A, B;
        for (int v : parts[i]) (v < m ? A : B).push_back(v);
        std::vector<Edge> tree;
        for (int b : B) tree.push_back(make_edge(A[0], b));
        for (size_t t = 1; t < A.size(); ++t) tree.push_back(make_edge(A[t], B[0]));
        std::sort(tree.begin(), tree.end());
        tree.resize(scores[i]);
        forests[i] = std::move(tree);
    }

    StrongPartition sp;
    sp.kind = StrongKind::Bipartite;
    sp.d = d;
    sp.parts = std::move(parts);
    std::vector<int> sideA(m);
    for (int v = 0; v < m; ++v) sideA[v] = v;
    sp.side_a = VertexSubset(sideA);
    sp.forests = std::move(forests);
    sp.scores = std::move(scores);
    return sp;
}

StrongConstruction common_neighbour_partition(const Graph& g, int d, uint64_t seed,
                                              int max_retries) {
    require(d >= 1, "StructuralError", "dimension must be at least 1");
    const int n = g.vertex_count();
    require(n >= d, "StructuralError", "need at least d vertices");
    Rng master(seed, 47);

    StrongConstruction out;
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        out.attempts = attempt;
        Rng rng(master.derive(attempt), 0);
        std::vector<int> assign = dealt_assignment(n, d, rng);

        // every vertex pair needs a common neighbour in every part
        bool ok = true;
        std::vector<char> hit(d);
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                std::fill(hit.begin(), hit.end(), 0);
                int remaining = d;
                const auto& nu = g.neighbours(u);
                const auto& nv = g.neighbours(v);
                size_t a = 0, b = 0;
                while (a < nu.size() && b < nv.size() && remaining > 0) {
                    if (nu[a] < nv[b]) ++a;
                    else if (nv[b] < nu[a]) ++b;
                    else {
                        int part = assign[nu[a]];
                        if (!hit[part]) { hit[part] = 1; --remaining; }
                        ++a;
                        ++b;
                    }
                }
                if (remaining > 0) ok = false;
            }
        }
        if (!ok) continue;

        StrongPartition sp;
        sp.kind = StrongKind::TypeI;
        sp.d = d;
        sp.parts = collect_parts(assign, d);
        if (verify_strong(g, sp)) {
            out.success = true;
            out.partition = std::move(sp);
            return out;
        }
    }
    return out;
}

DiracOutcome dirac_strong_partition(const Graph& g, uint64_t seed, int max_retries) {
    const int n = g.vertex_count();
    require(n >= 3, "StructuralError", "need at least three vertices");
    DiracOutcome out;
    out.surplus = g.min_degree() - n / 2.0;
    if (out.surplus <= 0) return out; // not a Dirac-type graph
    out.d = static_cast<int>(std::floor(2.0 * out.surplus / (3.0 * std::log(n))));
    if (out.d < 1) return out;
    out.construction = common_neighbour_partition(g, out.d, seed, max_retries);
    return out;
}

} // namespace rlab
