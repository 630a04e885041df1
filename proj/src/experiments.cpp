#include "rlab/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "rlab/constructors.hpp"
#include "rlab/generators.hpp"
#include "rlab/properties.hpp"
#include "rlab/report.hpp"
#include "rlab/rigid_component.hpp"

namespace rlab {

using json = nlohmann::json;

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("RIGIDITYLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    return hw;
}

void parallel_for(int items, const std::function<void(int)>& fn) {
    int workers = std::min(worker_count(), std::max(1, items));
    if (workers <= 1) {
        for (int i = 0; i < items; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= items) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

Graph hyperoctahedral_graph(int n) {
    require(n >= 2 && n % 2 == 0, "StructuralError", "hyperoctahedral graphs need even n");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(v == u + 1 && u % 2 == 0)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

} // namespace

json bipartite_table_experiment(int max_mn, int max_d, uint64_t seed) {
    Timer timer;
    json report;
    stamp_report(report, "bipartite-table", seed);
    report["parameters"] = {{"max_mn", max_mn}, {"max_d", max_d}};
    report["provenance"] = {
        {"claim", "K_{m,n} is d-rigid iff m,n >= d+1 and m+n >= C(d+2,2); the rank "
                  "certificate and the partition pipeline both match the characterization"},
        {"free_choices", {{"retries_on_mismatch", 3}, {"trials", 3}}}};

    struct Cell {
        int m, n, d;
        bool expected, certified, partition_ok;
    };
    std::vector<std::tuple<int, int, int>> cells;
    for (int m = 2; m <= max_mn; ++m)
        for (int n = m; n <= max_mn; ++n)
            for (int d = 1; d <= max_d; ++d) cells.push_back({m, n, d});

    std::vector<Cell> results(cells.size());
    Rng master(seed, 101);
    std::vector<uint64_t> cell_seed(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) cell_seed[i] = master.derive(i);

    parallel_for(static_cast<int>(cells.size()), [&](int idx) {
        auto [m, n, d] = cells[idx];
        Cell c{m, n, d, false, false, false};
        c.expected = m >= d + 1 && n >= d + 1 &&
                     m + n >= (static_cast<long long>(d + 2) * (d + 1)) / 2;
        Graph g = Graph::complete_bipartite(m, n);
        if (m + n >= d + 1) {
            RigidityVerdict v = randomized_rigidity_test(g, d, 3, cell_seed[idx]);
            c.certified = v.certified();
            for (int retry = 0; retry < 3 && c.certified != c.expected; ++retry) {
                v = randomized_rigidity_test(g, d, 3, Rng::mix(cell_seed[idx]) + retry + 1);
                c.certified = v.certified();
            }
        }
        // partition construction succeeds exactly on the true cells
        try {
            StrongPartition sp = complete_bipartite_partition(m, n, d);
            RigidPartition rp = convert_to_rigid_partition(g, sp);
            c.partition_ok = c.expected && verify_rigid_partition(g, rp).accepted;
        } catch (const Error& e) {
            c.partition_ok = !c.expected && e.code() == "ConditionViolated";
        }
        results[idx] = c;
    });

    json rows = json::array();
    int mismatches = 0, partition_failures = 0;
    for (const Cell& c : results) {
        if (c.certified != c.expected) ++mismatches;
        if (!c.partition_ok) ++partition_failures;
        rows.push_back({{"m", c.m},
                        {"n", c.n},
                        {"d", c.d},
                        {"expected", c.expected},
                        {"certified", c.certified},
                        {"partition_ok", c.partition_ok}});
    }
    report["trials"] = std::move(rows);
    report["aggregate"] = {{"cells", results.size()},
                           {"mismatches", mismatches},
                           {"partition_failures", partition_failures}};
    report["wall_ms"] = timer.ms();
    return report;
}

json hyperoctahedral_experiment(int max_n, int trials, uint64_t seed) {
    Timer timer;
    json report;
    stamp_report(report, "hyperoctahedral", seed);
    report["parameters"] = {{"max_n", max_n}, {"trials", trials}};
    report["provenance"] = {
        {"claim", "the rigidity of K_n minus a perfect matching equals "
                  "n-1-floor(sqrt(n)+1/2) for even n"},
        {"free_choices", {{"trials", trials}}}};

    std::vector<int> ns;
    for (int n = 6; n <= max_n; n += 2) ns.push_back(n);
    std::vector<json> rows(ns.size());
    std::vector<int> bad(ns.size(), 0);
    Rng master(seed, 103);
    std::vector<uint64_t> seeds(ns.size());
    for (size_t i = 0; i < ns.size(); ++i) seeds[i] = master.derive(i);

    parallel_for(static_cast<int>(ns.size()), [&](int idx) {
        int n = ns[idx];
        Graph g = hyperoctahedral_graph(n);
        RigidityNumberResult r = rigidity_number(g, trials, seeds[idx], true);
        int formula = n - 1 - static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)) + 0.5));
        bool match = r.number == formula && !r.nonmonotone;
        if (!match) bad[idx] = 1;
        rows[idx] = {{"n", n},
                     {"computed", r.number},
                     {"formula", formula},
                     {"match", match},
                     {"nonmonotone", r.nonmonotone}};
    });

    int mismatches = 0;
    for (int b : bad) mismatches += b;
    report["trials"] = rows;
    report["aggregate"] = {{"rows", ns.size()}, {"mismatches", mismatches}};
    report["wall_ms"] = timer.ms();
    return report;
}

namespace {

struct SurveySource {
    bool ok = false;
    std::string kind;
    Graph graph;
    RigidPartition partition;
};

std::vector<std::vector<int>> deal_parts(int n, int k, Rng& rng) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<std::vector<int>> parts(k);
    for (int i = 0; i < n; ++i) parts[i % k].push_back(order[i]);
    for (auto& p : parts) std::sort(p.begin(), p.end());
    return parts;
}

SurveySource draw_survey_source(int t, uint64_t seed) {
    SurveySource src;
    Rng rng(seed, 0xB0 + t);
    int kind = t % 5;
    int variant = (t / 5) % 3;
    switch (kind) {
        case 0: { // CDS family
            int d = 2 + variant;
            int k = (d + 1) * d / 2;
            int n = d == 2 ? 12 + static_cast<int>(rng.next_below(25))
                           : (d == 3 ? 30 : 40);
            double p = d == 2 ? 0.55 : (d == 3 ? 0.7 : 0.8);
            for (int attempt = 0; attempt < 80; ++attempt) {
                Graph g = gnp(n, p, rng.next_u64());
                auto sets = deal_parts(n, k, rng);
                bool all = true;
                for (const auto& s : sets)
                    if (!is_cds(g, VertexSubset(s))) { all = false; break; }
                if (!all) continue;
                src.ok = true;
                src.kind = "cds";
                src.graph = g;
                src.partition = convert_to_rigid_partition(g, CdsFamily{d, sets});
                return src;
            }
            return src;
        }
        case 1:
        case 2: { // strong type I / type II
            bool type1 = kind == 1;
            int d = 2 + variant;
            int parts_count = type1 ? d : d + 1;
            int n = 12 + static_cast<int>(rng.next_below(29 - 4 * variant));
            double p = 0.45 + 0.12 * d;
            for (int attempt = 0; attempt < 80; ++attempt) {
                Graph g = gnp(n, std::min(0.9, p), rng.next_u64());
                StrongPartition sp;
                sp.kind = type1 ? StrongKind::TypeI : StrongKind::TypeII;
                sp.d = d;
                sp.parts = deal_parts(n, parts_count, rng);
                if (!verify_strong(g, sp)) continue;
                src.ok = true;
                src.kind = type1 ? "strong-1" : "strong-2";
                src.graph = g;
                src.partition = convert_to_rigid_partition(g, sp);
                return src;
            }
            return src;
        }
        case 3: { // random bipartite, matching route
            int d = 2 + (variant % 2);
            int side = (d == 2 ? 12 : 16) + static_cast<int>(rng.next_below(5));
            double p = d == 2 ? 0.5 : 0.7;
            for (int attempt = 0; attempt < 60; ++attempt) {
                BipartiteGraph bg = gnnp(side, p, rng.next_u64());
                StrongConstruction sc = bipartite_strong_partition(bg, d, rng.next_u64(), 40);
                if (!sc.success) continue;
                src.ok = true;
                src.kind = "bipartite-random";
                src.graph = bg.graph;
                src.partition = convert_to_rigid_partition(bg.graph, sc.partition);
                return src;
            }
            return src;
        }
        default: { // complete bipartite cells
            int d = 2 + variant;
            long long need = static_cast<long long>(d + 2) * (d + 1) / 2;
            int m = d + 1 + t % 3;
            int n = std::max<long long>(d + 1, need - m) + t % 2;
            Graph g = Graph::complete_bipartite(m, n);
            src.ok = true;
            src.kind = "bipartite-complete";
            src.graph = g;
            src.partition = convert_to_rigid_partition(g, complete_bipartite_partition(m, n, d));
            return src;
        }
    }
}

} // namespace

json bound_survey_experiment(int count, uint64_t seed, double tol, int restriction_cap) {
    Timer timer;
    json report;
    stamp_report(report, "bound-survey", seed);
    report["parameters"] = {{"count", count}, {"tol", tol}};
    report["provenance"] = {
        {"claim", "every accepted partition has a_d(G) at least half the worst a(G_ij), "
                  "certified through the limit-framework spectrum; the lower stiffness "
                  "matrix equals (M+T)/2 entrywise"},
        {"free_choices",
         {{"graph_models", "dense gnp / gnnp / complete bipartite"}, {"sources", 5}}}};

    Rng master(seed, 107);
    std::vector<uint64_t> seeds(count);
    for (int i = 0; i < count; ++i) seeds[i] = master.derive(i);
    std::vector<json> rows(count);

    parallel_for(count, [&](int t) {
        SurveySource src = draw_survey_source(t, seeds[t]);
        json row;
        row["index"] = t;
        if (!src.ok) {
            row["constructed"] = false;
            rows[t] = std::move(row);
            return;
        }
        row["constructed"] = true;
        row["kind"] = src.kind;
        row["n"] = src.graph.vertex_count();
        row["d"] = src.partition.d;
        VerifyResult vr = verify_rigid_partition(src.graph, src.partition, 8);
        row["accepted"] = vr.accepted;
        row["hierarchy_only_parts"] = vr.hierarchy_only_parts.size();
        if (vr.accepted) {
            BoundReport br = quantitative_bound_check(src.graph, src.partition, vr.hierarchy, tol);
            row["holds"] = br.holds;
            row["lambda"] = json_number(br.lambda_value);
            row["bound"] = json_number(br.min_half_a);
            row["mt_deviation"] = br.mt_deviation;
            row["singleton_ok"] = singleton_clique_check(src.graph, src.partition);
            if (src.graph.vertex_count() <= restriction_cap) {
                int omega = clique_number(src.graph);
                row["restriction_ok"] =
                    2 * src.partition.d <= src.graph.vertex_count() + omega;
            }
        }
        rows[t] = std::move(row);
    });

    int constructed = 0, accepted = 0, holds = 0, singleton_ok = 0, singleton_seen = 0;
    int restriction_ok = 0, restriction_seen = 0;
    double max_dev = 0.0;
    for (const json& row : rows) {
        if (!row.value("constructed", false)) continue;
        ++constructed;
        if (!row.value("accepted", false)) continue;
        ++accepted;
        if (row.value("holds", false)) ++holds;
        max_dev = std::max(max_dev, row.value("mt_deviation", 0.0));
        ++singleton_seen;
        if (row.value("singleton_ok", false)) ++singleton_ok;
        if (row.contains("restriction_ok")) {
            ++restriction_seen;
            if (row["restriction_ok"].get<bool>()) ++restriction_ok;
        }
    }
    report["trials"] = rows;
    report["aggregate"] = {{"requested", count},
                           {"constructed", constructed},
                           {"accepted", accepted},
                           {"holds", holds},
                           {"max_mt_deviation", max_dev},
                           {"singleton_ok", singleton_ok},
                           {"singleton_seen", singleton_seen},
                           {"restriction_ok", restriction_ok},
                           {"restriction_seen", restriction_seen}};
    report["wall_ms"] = timer.ms();
    return report;
}

json hitting_time_experiment(int n, int d, int trials, uint64_t seed) {
    Timer timer;
    json report;
    stamp_report(report, "hitting-time", seed);
    report["parameters"] = {{"n", n}, {"d", d}, {"trials", trials}};
    report["provenance"] = {
        {"claim", "at the random graph process hitting time for minimum degree d the "
                  "graph is typically d-rigid; checked as a finite-size frequency"},
        {"free_choices", {{"n", n}, {"certificate_trials", 2}}}};

    Rng master(seed, 109);
    std::vector<uint64_t> seeds(trials);
    for (int i = 0; i < trials; ++i) seeds[i] = master.derive(i);
    std::vector<json> rows(trials);

    parallel_for(trials, [&](int t) {
        ProcessSnapshot snap = process_hitting_time(n, d, seeds[t]);
        bool invariant = snap.graph.min_degree() >= d;
        {
            // one step earlier some endpoint of the last edge was below d
            int du = snap.graph.degree(snap.last_edge.first);
            int dv = snap.graph.degree(snap.last_edge.second);
            invariant = invariant && (du - 1 < d || dv - 1 < d);
        }
        RigidityVerdict v = randomized_rigidity_test(snap.graph, d, 2, Rng::mix(seeds[t]));
        rows[t] = {{"trial", t},
                   {"tau", snap.tau},
                   {"hitting_invariant", invariant},
                   {"certified", v.certified()},
                   {"observed_rank", v.observed_rank},
                   {"required_rank", v.required_rank}};
    });

    int certified = 0, invariants = 0;
    for (const json& row : rows) {
        if (row["certified"].get<bool>()) ++certified;
        if (row["hitting_invariant"].get<bool>()) ++invariants;
    }
    report["trials"] = rows;
    report["aggregate"] = {{"trials", trials},
                           {"certified", certified},
                           {"hitting_invariants", invariants}};
    report["wall_ms"] = timer.ms();
    return report;
}

json giant_experiment(int n, int d, double C, int trials, uint64_t seed) {
    Timer timer;
    json report;
    stamp_report(report, "giant", seed);
    double p = C * d * std::log(static_cast<double>(d)) / n;
    report["parameters"] = {{"n", n}, {"d", d}, {"C", C}, {"p", p}, {"trials", trials}};
    report["provenance"] = {
        {"claim", "G(n, C d log d / n) typically contains an almost spanning d-rigid "
                  "vertex set; the greedy closure lower-bounds it and every claim is "
                  "re-validated by the rank certificate"},
        {"free_choices", {{"C", C}, {"threshold_fraction", 0.5}}}};

    Rng master(seed, 113);
    std::vector<uint64_t> seeds(trials);
    for (int i = 0; i < trials; ++i) seeds[i] = master.derive(i);
    std::vector<json> rows(trials);

    parallel_for(trials, [&](int t) {
        Graph g = gnp(n, p, seeds[t]);
        json row;
        row["trial"] = t;
        try {
            GrowthTrace trace = greedy_rigid_closure(g, d, Rng::mix(seeds[t]), 2);
            double fraction = static_cast<double>(trace.final_set.size()) / n;
            row["fraction"] = fraction;
            row["validated"] = trace.validated;
            row["final_size"] = trace.final_set.size();
        } catch (const Error& e) {
            row["fraction"] = 0.0;
            row["validated"] = false;
            row["error"] = e.code();
        }
        rows[t] = std::move(row);
    });

    int big_validated = 0;
    for (const json& row : rows)
        if (row.value("validated", false) && row.value("fraction", 0.0) >= 0.5)
            ++big_validated;
    report["trials"] = rows;
    report["aggregate"] = {{"trials", trials}, {"big_validated", big_validated}};
    report["wall_ms"] = timer.ms();
    return report;
}

json implication_suite_experiment(uint64_t seed) {
    Timer timer;
    json report;
    stamp_report(report, "implication-suites", seed);
    report["parameters"] = json::object();
    report["provenance"] = {
        {"claim", "small-scale exhaustive checks of the sparse/expander/connector, "
                  "jumbledness and bi-connector matching implications"},
        {"free_choices", {{"max_n", 14}}}};

    Rng rng(seed, 127);
    json agg;

    // pool of small test graphs
    std::vector<Graph> pool;
    for (int n : {6, 8, 10, 12, 14}) {
        pool.push_back(Graph::cycle(n));
        pool.push_back(Graph::complete(n));
        for (double p : {0.2, 0.35, 0.5, 0.7})
            for (int rep = 0; rep < 3; ++rep) pool.push_back(gnp(n, p, rng.next_u64()));
        pool.push_back(gnm(n, std::min<long long>(2 * n, n * (n - 1) / 2), rng.next_u64()));
    }

    { // sparse + min degree 6y implies (x/3)-expander
        long long tested = 0, violations = 0;
        for (const Graph& g : pool) {
            int n = g.vertex_count();
            for (int x : {3, 6, 9, n}) {
                if (x < 3) continue;
                for (double y : {0.5, 1.0, 1.5, 2.5}) {
                    if (g.min_degree() < 6 * y) continue;
                    if (is_sparse(g, x, y, CheckMode::Exact).kind != VerdictKind::Holds)
                        continue;
                    int r = x / 3;
                    if (r < 1) continue;
                    ++tested;
                    if (is_expander(g, r, CheckMode::Exact).kind != VerdictKind::Holds)
                        ++violations;
                }
            }
        }
        agg["sparse_implies_expander"] = {{"tested", tested}, {"violations", violations}};
    }

    { // r-expander and 3r-connector imply connected
        long long tested = 0, violations = 0;
        for (const Graph& g : pool) {
            for (int r : {1, 2, 3}) {
                if (is_expander(g, r, CheckMode::Exact).kind != VerdictKind::Holds) continue;
                if (is_connector(g, 3 * r, CheckMode::Exact).kind != VerdictKind::Holds)
                    continue;
                ++tested;
                if (!is_connected(g)) ++violations;
            }
        }
        agg["expander_connector_connected"] = {{"tested", tested}, {"violations", violations}};
    }

    { // sparse + (2x/3)-connector: induced pairs with min degree >= 6y connect
        long long tested = 0, violations = 0;
        for (const Graph& g : pool) {
            int n = g.vertex_count();
            for (int x : {6, 9, n}) {
                int k = 2 * x / 3;
                if (k < 1) continue;
                for (double y : {0.5, 1.0, 1.5}) {
                    if (is_sparse(g, x, y, CheckMode::Exact).kind != VerdictKind::Holds)
                        continue;
                    if (is_connector(g, k, CheckMode::Exact).kind != VerdictKind::Holds)
                        continue;
                    for (int rep = 0; rep < 6; ++rep) {
                        std::vector<int> order(n);
                        for (int i = 0; i < n; ++i) order[i] = i;
                        rng.shuffle(order);
                        bool same = rep % 2 == 0;
                        int a = 2 + static_cast<int>(rng.next_below(std::max(1, n / 2)));
                        std::vector<int> u1(order.begin(), order.begin() + a);
                        std::vector<int> u2 =
                            same ? u1
                                 : std::vector<int>(order.begin() + a,
                                                    order.begin() + std::min(n, 2 * a));
                        if (u2.empty()) continue;
                        InducedSubgraph sub =
                            induced_pair(g, VertexSubset(u1), VertexSubset(u2));
                        if (sub.graph.vertex_count() == 0 || sub.graph.min_degree() < 6 * y)
                            continue;
                        ++tested;
                        if (!is_connected(sub.graph)) ++violations;
                    }
                }
            }
        }
        agg["sparse_connector_induced_connected"] = {{"tested", tested},
                                                     {"violations", violations}};
    }

    { // jumbledness certificates: sparsity and connector consequences
        long long tested_sparse = 0, violations_sparse = 0;
        long long tested_conn = 0, violations_conn = 0;
        std::vector<Graph> regulars;
        for (int n : {6, 8, 10, 12}) {
            regulars.push_back(Graph::cycle(n));
            regulars.push_back(Graph::complete(n));
            regulars.push_back(random_regular(n, 3, rng.next_u64(), true).graph);
        }
        for (const Graph& g : regulars) {
            auto [p, beta] = jumbled_certificate_regular(g);
            int n = g.vertex_count();
            for (int x = 1; x <= n; ++x) {
                ++tested_sparse;
                if (is_sparse(g, x, (p * x + beta) / 2.0, CheckMode::Exact).kind !=
                    VerdictKind::Holds)
                    ++violations_sparse;
            }
            for (int K = static_cast<int>(std::floor(beta / p)) + 1; K <= n; ++K) {
                ++tested_conn;
                if (is_connector(g, K, CheckMode::Exact).kind != VerdictKind::Holds)
                    ++violations_conn;
            }
        }
        agg["jumbled_is_sparse"] = {{"tested", tested_sparse}, {"violations", violations_sparse}};
        agg["jumbled_is_connector"] = {{"tested", tested_conn}, {"violations", violations_conn}};
    }

    { // K-bi-connector with sides >= m admits a matching of size m-K+1
        long long tested = 0, violations = 0;
        for (int side : {4, 5, 6, 7}) {
            for (double p : {0.3, 0.5, 0.8}) {
                for (int rep = 0; rep < 5; ++rep) {
                    BipartiteGraph bg = gnnp(side, p, rng.next_u64());
                    int matching = static_cast<int>(max_matching(bg).size());
                    for (int K = 1; K <= side; ++K) {
                        if (is_bi_connector(bg, K, CheckMode::Exact).kind !=
                            VerdictKind::Holds)
                            continue;
                        ++tested;
                        if (matching < side - K + 1) ++violations;
                    }
                }
            }
        }
        agg["biconnector_matching"] = {{"tested", tested}, {"violations", violations}};
    }

    long long total_violations = 0;
    for (const auto& [name, entry] : agg.items())
        total_violations += entry.at("violations").get<long long>();
    report["aggregate"] = agg;
    report["aggregate"]["total_violations"] = total_violations;
    report["trials"] = json::array();
    report["wall_ms"] = timer.ms();
    return report;
}

json oracle_agreement_experiment(int cases, uint64_t seed) {
    Timer timer;
    json report;
    stamp_report(report, "oracle-agreement", seed);
    report["parameters"] = {{"cases", cases}};
    report["provenance"] = {
        {"claim", "whenever the all-subsets cut oracle passes a part, the backtracking "
                  "hierarchy search accepts it"},
        {"free_choices", {{"max_part", 8}}}};

    Rng master(seed, 131);
    std::vector<uint64_t> seeds(cases);
    for (int i = 0; i < cases; ++i) seeds[i] = master.derive(i);
    std::vector<json> rows(cases);

    parallel_for(cases, [&](int t) {
        Rng rng(seeds[t], 0);
        int d = 1 + static_cast<int>(rng.next_below(3));
        int k = d + 1;
        std::vector<int> sizes(k);
        int n = 0;
        for (int i = 0; i < k; ++i) {
            sizes[i] = 2 + static_cast<int>(rng.next_below(7)); // parts of 2..8
            n += sizes[i];
        }
        double p = 0.2 + 0.4 * rng.next_unit();
        Graph g = gnp(n, p, rng.next_u64());

        RigidPartition rp;
        rp.d = d;
        rp.parts.resize(k);
        {
            std::vector<int> order(n);
            for (int i = 0; i < n; ++i) order[i] = i;
            rng.shuffle(order);
            int at = 0;
            for (int i = 0; i < k; ++i)
                for (int s = 0; s < sizes[i]; ++s) rp.parts[i].push_back(order[at++]);
            for (auto& part : rp.parts) std::sort(part.begin(), part.end());
        }
        std::vector<int> owner(n);
        for (int i = 0; i < k; ++i)
            for (int v : rp.parts[i]) owner[v] = i;
        for (const Edge& e : g.edges()) {
            if (rng.next_unit() > 0.8) continue; // leave some edges uncoloured
            int pu = owner[e.first], pv = owner[e.second];
            std::pair<int, int> key;
            if (pu != pv) key = std::minmax(pu, pv);
            else {
                int other;
                do {
                    other = static_cast<int>(rng.next_below(k));
                } while (other == pu);
                key = std::minmax(pu, other);
            }
            rp.edge_colours[key].push_back(e);
        }
        for (auto& [key, edges] : rp.edge_colours) std::sort(edges.begin(), edges.end());

        int oracle_pass_search_fail = 0, search_pass_oracle_fail = 0, parts_checked = 0;
        for (int i = 0; i < k; ++i) {
            if (rp.parts[i].size() > 8) continue;
            ++parts_checked;
            bool oracle = brute_force_cut_oracle(g, rp, i);
            bool search = find_cut_hierarchy(g, rp, i).has_value();
            if (oracle && !search) ++oracle_pass_search_fail;
            if (search && !oracle) ++search_pass_oracle_fail;
        }
        rows[t] = {{"case", t},
                   {"parts_checked", parts_checked},
                   {"oracle_pass_search_fail", oracle_pass_search_fail},
                   {"hierarchy_only", search_pass_oracle_fail}};
    });

    long long checked = 0, disagreements = 0, hierarchy_only = 0;
    for (const json& row : rows) {
        checked += row["parts_checked"].get<int>();
        disagreements += row["oracle_pass_search_fail"].get<int>();
        hierarchy_only += row["hierarchy_only"].get<int>();
    }
    report["trials"] = rows;
    report["aggregate"] = {{"parts_checked", checked},
                           {"oracle_pass_search_fail", disagreements},
                           {"hierarchy_only", hierarchy_only}};
    report["wall_ms"] = timer.ms();
    return report;
}

} // namespace rlab
