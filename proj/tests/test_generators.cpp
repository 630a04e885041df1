#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "rlab/generators.hpp"
#include "rlab/graph.hpp"

using namespace rlab;

TEST_CASE("gnp extremes") {
    CHECK(gnp(8, 0.0, 1).edge_count() == 0);
    CHECK(gnp(8, 1.0, 1) == Graph::complete(8));
}

TEST_CASE("gnp seeds reproduce byte-identical graphs") {
    Graph a = gnp(50, 0.3, 12345);
    Graph b = gnp(50, 0.3, 12345);
    CHECK(write_graph_text(a) == write_graph_text(b));
    Graph c = gnp(50, 0.3, 12346);
    CHECK(write_graph_text(a) != write_graph_text(c));
}

TEST_CASE("gnp edge counts track the binomial moments") {
    const int n = 1000;
    const double p = 0.01;
    const double pairs = n * (n - 1) / 2.0;
    const double mean = pairs * p;
    const double sigma = std::sqrt(pairs * p * (1 - p));
    int within = 0;
    for (int s = 0; s < 100; ++s) {
        Graph g = gnp(n, p, 1000 + s);
        if (std::fabs(g.edge_count() - mean) <= 3 * sigma) ++within;
    }
    CHECK(within >= 99);
}

TEST_CASE("gnnp extremes and structure") {
    BipartiteGraph empty = gnnp(6, 0.0, 1);
    CHECK(empty.graph.edge_count() == 0);
    BipartiteGraph full = gnnp(6, 1.0, 1);
    CHECK(full.graph.edge_count() == 36);
    CHECK(full.part_a.size() == 6);
    CHECK(full.part_b.size() == 6);
    for (const Edge& e : full.graph.edges())
        CHECK(full.part_a.contains(e.first) != full.part_a.contains(e.second));
}

TEST_CASE("gnm extremes and errors") {
    CHECK(gnm(6, 0, 1).edge_count() == 0);
    CHECK(gnm(6, 15, 1) == Graph::complete(6));
    CHECK_THROWS_WITH_AS(gnm(6, 16, 1), doctest::Contains("TooManyEdges"), Error);
}

TEST_CASE("gnm single edges are near uniform over the pairs") {
    std::map<Edge, int> counts;
    const int runs = 10000;
    for (int s = 0; s < runs; ++s) {
        Graph g = gnm(5, 1, 40000 + s);
        REQUIRE(g.edge_count() == 1);
        counts[g.edges()[0]]++;
    }
    const double mean = runs / 10.0;
    const double sigma = std::sqrt(runs * 0.1 * 0.9);
    CHECK(counts.size() == 10);
    for (const auto& [e, c] : counts) CHECK(std::fabs(c - mean) <= 3 * sigma);
}

TEST_CASE("gnp and gnm agree on mean degree") {
    const int n = 200;
    const double p = 0.1;
    long long m = std::llround(p * n * (n - 1) / 2.0);
    double total_gnp = 0, total_gnm = 0;
    for (int s = 0; s < 100; ++s) {
        total_gnp += gnp(n, p, 777 + s).edge_count();
        total_gnm += gnm(n, m, 888 + s).edge_count();
    }
    double pairs = n * (n - 1) / 2.0;
    double sigma_mean = std::sqrt(pairs * p * (1 - p) / 100.0);
    CHECK(std::fabs(total_gnp / 100.0 - total_gnm / 100.0) <= 3 * sigma_mean);
}

TEST_CASE("hitting time process on tiny cases") {
    ProcessSnapshot a = process_hitting_time(2, 1, 1);
    CHECK(a.tau == 1);
    CHECK(a.graph == Graph::complete(2));

    ProcessSnapshot b = process_hitting_time(3, 2, 1);
    CHECK(b.tau == 3);
    CHECK(b.graph == Graph::complete(3));
}

TEST_CASE("the last process edge is load bearing") {
    Rng rng(3, 0);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 5 + static_cast<int>(rng.next_below(40));
        int d = 1 + static_cast<int>(rng.next_below(4));
        if (d > n - 1) continue;
        ProcessSnapshot snap = process_hitting_time(n, d, rng.next_u64());
        CHECK(snap.graph.min_degree() >= d);
        // one step before the hitting time some endpoint was still short
        int du = snap.graph.degree(snap.last_edge.first);
        int dv = snap.graph.degree(snap.last_edge.second);
        CHECK((du - 1 < d || dv - 1 < d));
    }
}

TEST_CASE("configuration model tiny cases") {
    RegularSample a = random_regular(2, 1, 1, true);
    CHECK(a.graph == Graph(2, {{0, 1}}));

    RegularSample b = random_regular(3, 2, 1, true);
    CHECK(b.graph == Graph::cycle(3));

    CHECK_THROWS_WITH_AS(random_regular(3, 3, 1, true), doctest::Contains("ParityError"),
                         Error);
}

TEST_CASE("simple regular samples audit clean") {
    Rng rng(5, 0);
    for (int rep = 0; rep < 10; ++rep) {
        RegularSample s = random_regular(100, 5, rng.next_u64(), true);
        CHECK(s.graph.vertex_count() == 100);
        for (int v = 0; v < 100; ++v) CHECK(s.graph.degree(v) == 5);
    }
}

TEST_CASE("multigraph samples report collapses") {
    int collapsed = 0;
    for (int s = 0; s < 30; ++s) {
        RegularSample r = random_regular(6, 3, 900 + s, false);
        if (r.collapsed) {
            ++collapsed;
            CHECK(r.graph.edge_count() < 9);
        } else {
            CHECK(r.graph.edge_count() == 9);
        }
    }
    CHECK(collapsed > 0); // loops/parallels do happen at this size
}
