#include "rlab/rigid_component.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <json.hpp>

#include "rlab/rng.hpp"

namespace rlab {

namespace {

// Zero-extension closure: repeatedly add the smallest vertex with >= d
// neighbours inside the set.
void close_under_extension(const Graph& g, int d, std::vector<char>& in,
                           std::vector<std::pair<int, std::string>>* log,
                           const char* reason) {
    int n = g.vertex_count();
    std::vector<int> inside(n, 0);
    std::set<int> ready;
    for (int v = 0; v < n; ++v) {
        if (!in[v]) continue;
        for (int w : g.neighbours(v))
            if (!in[w] && ++inside[w] == d) ready.insert(w);
    }
    for (int v = 0; v < n; ++v)
        if (!in[v] && inside[v] >= d) ready.insert(v);
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        if (in[v]) continue;
        in[v] = 1;
        if (log) log->push_back({v, reason});
        for (int w : g.neighbours(v))
            if (!in[w] && ++inside[w] == d) ready.insert(w);
    }
}

// Lexicographically first (d+1)-clique avoiding forbidden vertices.
std::vector<int> first_clique_avoiding(const Graph& g, int k,
                                       const std::vector<char>& forbidden) {
    std::vector<int> partial;
    std::function<bool(int)> extend = [&](int from) {
        if (static_cast<int>(partial.size()) == k) return true;
        for (int v = from; v < g.vertex_count(); ++v) {
            if (forbidden[v]) continue;
            bool ok = true;
            for (int u : partial)
                if (!g.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            partial.push_back(v);
            if (extend(v + 1)) return true;
            partial.pop_back();
        }
        return false;
    };
    if (extend(0)) return partial;
    return {};
}

} // namespace

GrowthTrace greedy_rigid_closure(const Graph& g, int d, uint64_t seed,
                                 int validation_trials) {
    require(d >= 1, "StructuralError", "dimension must be at least 1");
    const int n = g.vertex_count();
    GrowthTrace trace;

    trace.seed_clique = first_clique(g, d + 1);
    require(!trace.seed_clique.empty(), "NoSeedClique",
            "graph contains no clique on d+1 vertices");

    std::vector<char> in(n, 0);
    for (int v : trace.seed_clique) in[v] = 1;
    close_under_extension(g, d, in, &trace.additions, "zero-extension");

    // On stagnation, grow closures from fresh seeds; a closure sharing >= d
    // vertices glues onto the current set, others block their vertices.
    std::vector<char> exhausted = in;
    for (;;) {
        std::vector<int> seed2 = first_clique_avoiding(g, d + 1, exhausted);
        if (seed2.empty()) break;
        std::vector<char> other(n, 0);
        for (int v : seed2) other[v] = 1;
        close_under_extension(g, d, other, nullptr, "");
        int shared = 0;
        for (int v = 0; v < n; ++v)
            if (in[v] && other[v]) ++shared;
        if (shared >= d) {
            for (int v = 0; v < n; ++v) {
                if (other[v] && !in[v]) {
                    in[v] = 1;
                    trace.additions.push_back({v, "glue"});
                }
            }
            close_under_extension(g, d, in, &trace.additions, "zero-extension");
            for (int v = 0; v < n; ++v) exhausted[v] |= in[v];
        } else {
            for (int v = 0; v < n; ++v) exhausted[v] |= other[v];
        }
    }

    for (int v = 0; v < n; ++v)
        if (in[v]) trace.final_set.push_back(v);

    InducedSubgraph sub = induced_pair(g, VertexSubset(trace.final_set),
                                       VertexSubset(trace.final_set));
    trace.verdict = randomized_rigidity_test(sub.graph, d, validation_trials,
                                             Rng::mix(seed) ^ 0x9E37);
    trace.validated = trace.verdict.certified();
    return trace;
}

std::string growth_trace_to_json(const GrowthTrace& t) {
    nlohmann::json j;
    j["seed_clique"] = t.seed_clique;
    nlohmann::json adds = nlohmann::json::array();
    for (const auto& [v, reason] : t.additions) adds.push_back({{"vertex", v}, {"reason", reason}});
    j["additions"] = std::move(adds);
    j["final_set"] = t.final_set;
    j["validated"] = t.validated;
    j["observed_rank"] = t.verdict.observed_rank;
    j["required_rank"] = t.verdict.required_rank;
    return j.dump();
}

} // namespace rlab
