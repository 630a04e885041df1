#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlab/errors.hpp"
#include "rlab/generators.hpp"
#include "rlab/graph.hpp"
#include "rlab/rng.hpp"

using namespace rlab;

TEST_CASE("induced_pair on complete and path graphs") {
    Graph k4 = Graph::complete(4);
    InducedSubgraph cross = induced_pair(k4, VertexSubset({0, 1}), VertexSubset({2, 3}));
    CHECK(cross.graph.vertex_count() == 4);
    CHECK(cross.graph.edge_count() == 4); // the 4-cycle of cross pairs
    CHECK(cross.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(!cross.graph.has_edge(0, 1));
    CHECK(!cross.graph.has_edge(2, 3));

    InducedSubgraph same = induced_pair(k4, VertexSubset({0, 1}), VertexSubset({0, 1}));
    CHECK(same.graph.vertex_count() == 2);
    CHECK(same.graph.edge_count() == 1);

    Graph path = Graph::path(3);
    InducedSubgraph far = induced_pair(path, VertexSubset({0}), VertexSubset({2}));
    CHECK(far.graph.vertex_count() == 2);
    CHECK(far.graph.edge_count() == 0);
    CHECK(far.vertices == std::vector<int>{0, 2});
}

TEST_CASE("induced_pair rejects partial overlap") {
    Graph k4 = Graph::complete(4);
    CHECK_THROWS_WITH_AS(induced_pair(k4, VertexSubset({0, 1}), VertexSubset({1, 2})),
                         doctest::Contains("PartialOverlap"), Error);
}

TEST_CASE("connectivity conventions") {
    CHECK(!is_connected(Graph(0, {})));
    CHECK(is_connected(Graph(1, {})));
    CHECK(!is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph::cycle(5)));
}

TEST_CASE("connected dominating sets") {
    Graph path = Graph::path(3);
    CHECK(is_cds(path, VertexSubset({1})));
    CHECK(!is_cds(path, VertexSubset({0})));
    CHECK(is_cds(Graph::cycle(6), VertexSubset({0, 1, 2, 3})));
}

TEST_CASE("is_cds of the full set matches connectivity") {
    Rng rng(7, 0);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        Graph g = gnp(n, 0.3 + 0.4 * rng.next_unit(), rng.next_u64());
        CHECK(is_cds(g, VertexSubset::full(n)) == is_connected(g));
    }
}

TEST_CASE("supersets of a CDS are CDSs") {
    Rng rng(11, 0);
    int found = 0;
    for (int rep = 0; rep < 300 && found < 60; ++rep) {
        int n = 3 + static_cast<int>(rng.next_below(6));
        Graph g = gnp(n, 0.4 + 0.4 * rng.next_unit(), rng.next_u64());
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (rng.next_unit() < 0.5) members.push_back(v);
        VertexSubset s(members);
        if (s.empty() || !is_cds(g, s)) continue;
        ++found;
        for (int v = 0; v < n; ++v) CHECK(is_cds(g, s.with(v)));
    }
    CHECK(found > 0);
}

TEST_CASE("common neighbourhoods") {
    CHECK(common_neighbours(Graph::complete(6), 0, 1).members() ==
          std::vector<int>{2, 3, 4, 5});
    CHECK(common_neighbours(Graph::cycle(4), 0, 2).members() == std::vector<int>{1, 3});
    CHECK(common_neighbours(Graph::path(3), 0, 2).members() == std::vector<int>{1});
    CHECK_THROWS_WITH_AS(common_neighbours(Graph::complete(3), 1, 1),
                         doctest::Contains("SameVertex"), Error);
}

namespace {

// independent component count by repeated sweeps over an adjacency matrix
int brute_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> label(n);
    for (int v = 0; v < n; ++v) label[v] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : g.edges()) {
            int lo = std::min(label[e.first], label[e.second]);
            if (label[e.first] != lo || label[e.second] != lo) {
                label[e.first] = label[e.second] = lo;
                changed = true;
            }
        }
    }
    std::vector<int> uniq = label;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    return static_cast<int>(uniq.size());
}

} // namespace

TEST_CASE("induced subgraph connectivity matches a brute component count") {
    Rng rng(13, 0);
    for (int rep = 0; rep < 120; ++rep) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        Graph g = gnp(n, rng.next_unit(), rng.next_u64());
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (rng.next_unit() < 0.7) members.push_back(v);
        if (members.empty()) continue;
        VertexSubset a(members);
        InducedSubgraph sub = induced_pair(g, a, a);
        CHECK(is_connected(sub.graph) == (brute_components(sub.graph) == 1));
    }
}

TEST_CASE("cross edge counts match the double loop") {
    Rng rng(17, 0);
    for (int rep = 0; rep < 80; ++rep) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        Graph g = gnp(n, rng.next_unit(), rng.next_u64());
        std::vector<int> am, bm;
        for (int v = 0; v < n; ++v) {
            double u = rng.next_unit();
            if (u < 0.4) am.push_back(v);
            else if (u < 0.8) bm.push_back(v);
        }
        VertexSubset a(am), b(bm);
        if (!a.disjoint_from(b)) continue;
        InducedSubgraph sub = induced_pair(g, a, b);
        CHECK(static_cast<long long>(sub.graph.edge_count()) == ordered_cross_pairs(g, a, b));
    }
}

TEST_CASE("graph text format round trips") {
    Graph g(5, {{0, 1}, {1, 2}, {0, 4}});
    std::string text = write_graph_text(g);
    CHECK(text == "5 3\n0 1\n0 4\n1 2\n");
    CHECK(parse_graph_text(text) == g);
    CHECK(write_graph_text(parse_graph_text(text)) == text);

    std::string commented = "# a graph\n5 3 # header\n0 1\n# middle\n0 4\n1 2\n";
    CHECK(parse_graph_text(commented) == g);

    CHECK_THROWS_AS(parse_graph_text("3 1\n1 0\n"), Error);   // u < v required
    CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n"), Error);   // count mismatch
    CHECK_THROWS_AS(parse_graph_text("3 1\n0 5\n"), Error);   // out of range
    CHECK_THROWS_AS(parse_graph_text("# only comments\n"), Error);
}

TEST_CASE("clique helpers") {
    CHECK(clique_number(Graph::complete(5)) == 5);
    CHECK(clique_number(Graph::cycle(5)) == 2);
    CHECK(clique_number(Graph(3, {})) == 1);
    CHECK(first_clique(Graph::complete(4), 3) == std::vector<int>{0, 1, 2});
    CHECK(first_clique(Graph::cycle(6), 3).empty());
}
