#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rlab/generators.hpp"
#include "rlab/properties.hpp"

using namespace rlab;

namespace {

int edges_inside(const Graph& g, const std::vector<int>& set) {
    int count = 0;
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) ++count;
    return count;
}

} // namespace

TEST_CASE("sparsity checker on fixed graphs") {
    CHECK(is_sparse(Graph::cycle(5), 5, 1.0).kind == VerdictKind::Holds);

    PropertyVerdict v = is_sparse(Graph::complete(4), 4, 1.0);
    REQUIRE(v.kind == VerdictKind::Violated);
    CHECK(edges_inside(Graph::complete(4), v.witness_a) >
          static_cast<double>(v.witness_a.size()) * 1.0);

    CHECK(is_sparse(Graph::complete(4), 4, 1.5).kind == VerdictKind::Holds);
}

TEST_CASE("connector checker on fixed graphs") {
    CHECK(is_connector(Graph::complete(8), 1).kind == VerdictKind::Holds);

    Graph twotriangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    PropertyVerdict v = is_connector(twotriangles, 3);
    REQUIRE(v.kind == VerdictKind::Violated);
    CHECK(v.witness_a.size() == 3);
    CHECK(v.witness_b.size() == 3);
    for (int a : v.witness_a)
        for (int b : v.witness_b) CHECK(!twotriangles.has_edge(a, b));

    CHECK(is_connector(Graph::cycle(6), 3).kind == VerdictKind::Holds);
}

TEST_CASE("expander checker on fixed graphs") {
    CHECK(is_expander(Graph::cycle(6), 1).kind == VerdictKind::Holds);
    PropertyVerdict v = is_expander(Graph::cycle(6), 2);
    REQUIRE(v.kind == VerdictKind::Violated);
    CHECK(v.witness_a.size() == 2);
    CHECK(is_expander(Graph::complete(5), 1).kind == VerdictKind::Holds);
}

TEST_CASE("checkers stay honest above the exact thresholds") {
    Graph big = gnp(40, 0.4, 99);
    PropertyVerdict v = is_sparse(big, 10, 5.0, CheckMode::Auto, 1, 2000);
    CHECK(v.kind != VerdictKind::Holds); // search may refute, never certify
    CHECK(!v.exact);
    CHECK_THROWS_WITH_AS(is_sparse(big, 10, 5.0, CheckMode::Exact),
                         doctest::Contains("TooLarge"), Error);
    CHECK_THROWS_WITH_AS(is_connector(big, 3, CheckMode::Exact),
                         doctest::Contains("TooLarge"), Error);
    CHECK_THROWS_WITH_AS(is_expander(big, 3, CheckMode::Exact),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("search witnesses re-verify against the definition") {
    Rng rng(7, 0);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = gnp(30, 0.5, rng.next_u64());
        PropertyVerdict v = is_sparse(g, 8, 1.2, CheckMode::RandomSearch, rng.next_u64());
        if (v.kind == VerdictKind::Violated) {
            CHECK(static_cast<int>(v.witness_a.size()) <= 8);
            CHECK(edges_inside(g, v.witness_a) >
                  1.2 * static_cast<double>(v.witness_a.size()));
        }
    }
}

TEST_CASE("jumbledness certificates from adjacency spectra") {
    auto [p1, b1] = jumbled_certificate_regular(Graph::complete(4));
    CHECK(p1 == doctest::Approx(0.75));
    CHECK(b1 == doctest::Approx(1.0).epsilon(1e-9));

    auto [p2, b2] = jumbled_certificate_regular(Graph::cycle(4));
    CHECK(p2 == doctest::Approx(0.5));
    CHECK(b2 == doctest::Approx(2.0).epsilon(1e-9));

    auto [p3, b3] = jumbled_certificate_regular(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(p3 == doctest::Approx(0.25));
    CHECK(b3 == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_WITH_AS(jumbled_certificate_regular(Graph::path(3)),
                         doctest::Contains("NotRegular"), Error);
}

TEST_CASE("maximum matchings") {
    BipartiteGraph k33(Graph::complete_bipartite(3, 3), VertexSubset({0, 1, 2}),
                       VertexSubset({3, 4, 5}));
    CHECK(max_matching(k33).size() == 3);

    BipartiteGraph star(Graph::complete_bipartite(1, 5), VertexSubset({0}),
                        VertexSubset({1, 2, 3, 4, 5}));
    CHECK(max_matching(star).size() == 1);

    BipartiteGraph empty(Graph(6, {}), VertexSubset({0, 1, 2}), VertexSubset({3, 4, 5}));
    CHECK(max_matching(empty).size() == 0);
}

TEST_CASE("matchings are matchings") {
    Rng rng(9, 0);
    for (int rep = 0; rep < 20; ++rep) {
        BipartiteGraph bg = gnnp(6, 0.4 + 0.5 * rng.next_unit(), rng.next_u64());
        std::vector<Edge> m = max_matching(bg);
        std::vector<int> used;
        for (const Edge& e : m) {
            CHECK(bg.graph.has_edge(e.first, e.second));
            used.push_back(e.first);
            used.push_back(e.second);
        }
        std::sort(used.begin(), used.end());
        CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
    }
}

// small-scale implication suites (the full versions run in the acceptance binary)

TEST_CASE("sparse graphs with large minimum degree expand") {
    Rng rng(11, 0);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 6 + static_cast<int>(rng.next_below(9));
        Graph g = gnp(n, 0.3 + 0.5 * rng.next_unit(), rng.next_u64());
        for (double y : {0.5, 1.0, 1.5}) {
            if (g.min_degree() < 6 * y) continue;
            for (int x : {3, 6, n}) {
                if (x / 3 < 1) continue;
                if (is_sparse(g, x, y, CheckMode::Exact).kind != VerdictKind::Holds)
                    continue;
                CHECK(is_expander(g, x / 3, CheckMode::Exact).kind == VerdictKind::Holds);
            }
        }
    }
}

TEST_CASE("expanders that are connectors are connected") {
    Rng rng(13, 0);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 5 + static_cast<int>(rng.next_below(10));
        Graph g = gnp(n, rng.next_unit(), rng.next_u64());
        for (int r : {1, 2}) {
            if (is_expander(g, r, CheckMode::Exact).kind != VerdictKind::Holds) continue;
            if (is_connector(g, 3 * r, CheckMode::Exact).kind != VerdictKind::Holds)
                continue;
            CHECK(is_connected(g));
        }
    }
}

TEST_CASE("bi-connectors admit large matchings") {
    Rng rng(17, 0);
    for (int rep = 0; rep < 25; ++rep) {
        int side = 4 + static_cast<int>(rng.next_below(4));
        BipartiteGraph bg = gnnp(side, 0.3 + 0.6 * rng.next_unit(), rng.next_u64());
        int matching = static_cast<int>(max_matching(bg).size());
        for (int K = 1; K <= side; ++K) {
            if (is_bi_connector(bg, K, CheckMode::Exact).kind != VerdictKind::Holds)
                continue;
            CHECK(matching >= side - K + 1);
        }
    }
}
