#include "rlab/generators.hpp"

#include <algorithm>
#include <unordered_set>

namespace rlab {

Graph gnp(int n, double p, uint64_t seed) {
    require(n >= 0, "StructuralError", "negative vertex count");
    require(p >= 0.0 && p <= 1.0, "StructuralError", "probability out of range");
    Rng rng(seed, 11);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bernoulli(p)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

BipartiteGraph gnnp(int n, double p, uint64_t seed) {
    require(n >= 0, "StructuralError", "negative side size");
    require(p >= 0.0 && p <= 1.0, "StructuralError", "probability out of range");
    Rng rng(seed, 13);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (rng.next_bernoulli(p)) edges.push_back({u, n + v});
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) { a[i] = i; b[i] = n + i; }
    return BipartiteGraph(Graph(2 * n, std::move(edges)), VertexSubset(a), VertexSubset(b));
}

namespace {

Edge decode_pair(int n, long long index) {
    // lexicographic pair order: (0,1),(0,2),..,(0,n-1),(1,2),..
    long long u = 0;
    long long remaining = index;
    while (remaining >= n - 1 - u) {
        remaining -= n - 1 - u;
        ++u;
    }
    return {static_cast<int>(u), static_cast<int>(u + 1 + remaining)};
}

} // namespace

Graph gnm(int n, long long m, uint64_t seed) {
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    require(m >= 0 && m <= total, "TooManyEdges", "edge count exceeds the number of pairs");
    // Floyd's uniform m-subset of the pair indices.
    Rng rng(seed, 17);
    std::unordered_set<long long> chosen;
    std::vector<long long> picks;
    for (long long j = total - m; j < total; ++j) {
        long long t = static_cast<long long>(rng.next_below(static_cast<uint64_t>(j + 1)));
        if (chosen.insert(t).second) picks.push_back(t);
        else { chosen.insert(j); picks.push_back(j); }
    }
    std::vector<Edge> edges;
    edges.reserve(picks.size());
    for (long long idx : picks) edges.push_back(decode_pair(n, idx));
    return Graph(n, std::move(edges));
}

ProcessSnapshot process_hitting_time(int n, int d, uint64_t seed) {
    require(n >= 1 && d >= 0 && d <= n - 1, "StructuralError",
            "need 0 <= d <= n-1 for the degree target");
    Rng rng(seed, 19);
    std::vector<Edge> order;
    order.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) order.push_back({u, v});
    rng.shuffle(order);

    std::vector<int> deg(n, 0);
    int below = d > 0 ? n : 0; // vertices with degree < d
    std::vector<Edge> added;
    ProcessSnapshot snap;
    snap.degree_target = d;
    for (const Edge& e : order) {
        if (below == 0) break;
        added.push_back(e);
        for (int v : {e.first, e.second}) {
            ++deg[v];
            if (deg[v] == d) --below;
        }
        snap.last_edge = e;
    }
    require(below == 0, "StructuralError", "process exhausted all pairs before the target");
    snap.tau = static_cast<long long>(added.size());
    snap.graph = Graph(n, std::move(added));
    return snap;
}

RegularSample random_regular(int n, int k, uint64_t seed, bool simple) {
    require(n >= 1 && k >= 0, "StructuralError", "bad parameters");
    require((static_cast<long long>(n) * k) % 2 == 0, "ParityError",
            "n*k must be even for a k-regular graph");
    if (simple) require(k <= n - 1, "StructuralError", "k-regular needs k <= n-1");
    constexpr int kMaxAttempts = 100000;

    Rng rng(seed, 23);
    std::vector<int> half(static_cast<size_t>(n) * k);
    for (size_t i = 0; i < half.size(); ++i) half[i] = static_cast<int>(i / k);

    RegularSample out;
    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        out.attempts = attempt;
        std::vector<int> perm = half;
        rng.shuffle(perm);
        bool clean = true;
        std::vector<Edge> edges;
        edges.reserve(half.size() / 2);
        for (size_t i = 0; i + 1 < perm.size(); i += 2) {
            int u = perm[i], v = perm[i + 1];
            if (u == v) { clean = false; if (simple) break; continue; }
            edges.push_back(make_edge(u, v));
        }
        if (clean) {
            std::vector<Edge> sorted = edges;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) clean = false;
        }
        if (!simple) {
            out.collapsed = !clean;
            out.graph = Graph(n, std::move(edges)); // parallel edges collapse
            return out;
        }
        if (clean) {
            out.graph = Graph(n, std::move(edges));
            return out;
        }
    }
    fail("RetryLimit", "no simple k-regular sample within the rejection cap");
}

} // namespace rlab
