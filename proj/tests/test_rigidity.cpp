#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle_rational.hpp"
#include "rlab/constructors.hpp"
#include "rlab/generators.hpp"
#include "rlab/rigidity.hpp"

using namespace rlab;

namespace {

Embedding line_embedding(const std::vector<double>& xs) {
    Embedding p;
    p.dim = 1;
    for (double x : xs) {
        Eigen::VectorXd v(1);
        v << x;
        p.coords.push_back(v);
    }
    return p;
}

Graph octahedron() {
    std::vector<Edge> es;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(v == u + 1 && u % 2 == 0)) es.push_back({u, v});
    return Graph(6, std::move(es));
}

RigidPartition accepted_k4_partition(CutHierarchy* hierarchy) {
    Graph k4 = Graph::complete(4);
    StrongPartition sp;
    sp.kind = StrongKind::TypeI;
    sp.d = 2;
    sp.parts = {{0, 1}, {2, 3}};
    RigidPartition rp = convert_to_rigid_partition(k4, sp);
    VerifyResult res = verify_rigid_partition(k4, rp);
    REQUIRE(res.accepted);
    if (hierarchy) *hierarchy = res.hierarchy;
    return rp;
}

} // namespace

TEST_CASE("rigidity matrix of an edge on a line") {
    Eigen::MatrixXd r = rigidity_matrix(Graph::complete(2), line_embedding({0.0, 1.0}));
    REQUIRE(r.rows() == 1);
    REQUIRE(r.cols() == 2);
    CHECK(r(0, 0) == -1.0);
    CHECK(r(0, 1) == 1.0);
}

TEST_CASE("rigidity matrix generic ranks against the rational oracle") {
    CHECK(oracle::generic_rigidity_rank(Graph::complete(3), 2, 42) == 3);
    CHECK(oracle::generic_rigidity_rank(Graph::cycle(4), 2, 42) == 4);
}

TEST_CASE("randomized certificate on the named examples") {
    RigidityVerdict k3 = randomized_rigidity_test(Graph::complete(3), 2, 3, 1);
    CHECK(k3.certified());
    CHECK(k3.observed_rank == 3);

    RigidityVerdict c4 = randomized_rigidity_test(Graph::cycle(4), 2, 3, 1);
    CHECK(!c4.certified());
    CHECK(c4.observed_rank == 4);
    CHECK(c4.required_rank == 5);

    CHECK(randomized_rigidity_test(Graph::complete_bipartite(4, 6), 3, 3, 1).certified());

    CHECK_THROWS_WITH_AS(randomized_rigidity_test(Graph::complete(3), 3, 1, 1),
                         doctest::Contains("TooFewVertices"), Error);
}

TEST_CASE("certificates agree with the rational oracle on random graphs") {
    Rng rng(77, 0);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 4 + static_cast<int>(rng.next_below(3));
        int d = 1 + static_cast<int>(rng.next_below(3));
        if (n < d + 1) continue;
        Graph g = gnp(n, 0.3 + 0.6 * rng.next_unit(), rng.next_u64());
        bool certified = randomized_rigidity_test(g, d, 3, rng.next_u64()).certified();
        CHECK(certified == oracle::generically_rigid(g, d, rng.next_u64()));
    }
}

TEST_CASE("observed rank never exceeds the bound") {
    Rng rng(78, 0);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 3 + static_cast<int>(rng.next_below(6));
        int d = 1 + static_cast<int>(rng.next_below(3));
        if (n < d + 1) continue;
        Graph g = gnp(n, rng.next_unit(), rng.next_u64());
        RigidityVerdict v = randomized_rigidity_test(g, d, 2, rng.next_u64());
        CHECK(v.observed_rank <= v.required_rank);
    }
}

TEST_CASE("rigidity numbers of the named graphs") {
    CHECK(rigidity_number(Graph::complete(5), 3, 1).number == 4);
    CHECK(rigidity_number(octahedron(), 3, 1).number == 3);
    CHECK(rigidity_number(Graph::path(3), 3, 1).number == 1);
    CHECK(rigidity_number(Graph(3, {{0, 1}}), 3, 1).number == 0); // disconnected
    CHECK(!rigidity_number(octahedron(), 3, 1, true).nonmonotone);
}

TEST_CASE("stiffness of a single edge is the Laplacian") {
    Graph k2 = Graph::complete(2);
    GeneralizedFramework fw = normalized_framework(k2, line_embedding({0.0, 1.0}));
    StiffnessPair s = stiffness_matrices(fw);
    CHECK(s.upper(0, 0) == doctest::Approx(1.0));
    CHECK(s.upper(0, 1) == doctest::Approx(-1.0));
    CHECK(s.upper(1, 1) == doctest::Approx(1.0));
    CHECK(s.lower(0, 0) == doctest::Approx(2.0));
}

TEST_CASE("lower stiffness of a path matches the closed form") {
    Graph path = Graph::path(3);
    GeneralizedFramework fw = normalized_framework(path, line_embedding({0.0, 1.0, 2.0}));
    StiffnessPair s = stiffness_matrices(fw);
    REQUIRE(s.lower.rows() == 2);
    CHECK(s.lower(0, 0) == doctest::Approx(2.0));
    CHECK(s.lower(1, 1) == doctest::Approx(2.0));
    CHECK(std::fabs(s.lower(0, 1)) == doctest::Approx(1.0));
    SymMatrix closed = lower_stiffness_closed_form(fw);
    CHECK((s.lower - closed).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("upper and lower stiffness share their nonzero spectra") {
    Rng rng(79, 0);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 3 + static_cast<int>(rng.next_below(5));
        Graph g = gnp(n, 0.5 + 0.4 * rng.next_unit(), rng.next_u64());
        if (g.edge_count() == 0) continue;
        int d = 1 + static_cast<int>(rng.next_below(3));
        Embedding p;
        p.dim = d;
        for (int v = 0; v < n; ++v) {
            Eigen::VectorXd x(d);
            for (int c = 0; c < d; ++c) x(c) = rng.next_unit() * 10.0 - 5.0;
            p.coords.push_back(x);
        }
        GeneralizedFramework fw = normalized_framework(g, p);
        StiffnessPair s = stiffness_matrices(fw);
        Spectrum up = eigenvalues_sym(s.upper);
        Spectrum low = eigenvalues_sym(s.lower);
        std::vector<double> a, b;
        for (double v : up.values)
            if (v > 1e-8) a.push_back(v);
        for (double v : low.values)
            if (v > 1e-8) b.push_back(v);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-7));
        CHECK(up.values[0] >= -1e-9 * s.upper.rows());
        CHECK(low.values[0] >= -1e-9 * s.lower.rows());
    }
}

TEST_CASE("stiffness rank equals rigidity matrix rank at rational points") {
    Rng rng(80, 0);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 2 + static_cast<int>(rng.next_below(5));
        int d = 1 + static_cast<int>(rng.next_below(3));
        Graph g = gnp(n, 0.6, rng.next_u64());
        if (g.edge_count() == 0) continue;
        std::vector<std::vector<long long>> pts(n, std::vector<long long>(d));
        for (auto& row : pts)
            for (auto& c : row) c = static_cast<long long>(rng.next_below(2001)) - 1000;
        auto rows = oracle::rigidity_rows(g, d, pts);
        int rank_r = oracle::rational_rank(rows);
        std::vector<std::vector<oracle::BigInt>> gram(
            g.edge_count(), std::vector<oracle::BigInt>(g.edge_count()));
        for (int i = 0; i < g.edge_count(); ++i)
            for (int j = 0; j < g.edge_count(); ++j) {
                oracle::BigInt acc = 0;
                for (size_t c = 0; c < rows[i].size(); ++c) acc += rows[i][c] * rows[j][c];
                gram[i][j] = acc;
            }
        CHECK(oracle::rational_rank(gram) == rank_r);
    }
}

TEST_CASE("algebraic connectivity conventions") {
    CHECK(algebraic_connectivity(Graph::complete(2)) == doctest::Approx(2.0));
    CHECK(std::isinf(algebraic_connectivity(Graph(1, {}))));
    CHECK(algebraic_connectivity(Graph(4, {{0, 1}, {2, 3}})) ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK_THROWS_WITH_AS(algebraic_connectivity(Graph(0, {})),
                         doctest::Contains("EmptyGraph"), Error);
}

TEST_CASE("regular simplex geometry") {
    auto d1 = regular_simplex(1);
    CHECK(d1[0](0) == doctest::Approx(-d1[1](0)));
    CHECK(std::fabs(d1[0](0)) > 0.0);

    for (int d = 1; d <= 6; ++d) {
        auto pts = regular_simplex(d);
        REQUIRE(static_cast<int>(pts.size()) == d + 1);
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
        for (const auto& x : pts) centroid += x;
        CHECK(centroid.lpNorm<Eigen::Infinity>() <= 1e-12 * (d + 1));
        double dist = (pts[0] - pts[1]).norm();
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                CHECK((pts[i] - pts[j]).norm() == doctest::Approx(dist).epsilon(1e-12));
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j)
                for (int k = 0; k <= d; ++k) {
                    if (j == i || k == i) continue;
                    Eigen::VectorXd yij = (pts[i] - pts[j]).normalized();
                    Eigen::VectorXd yik = (pts[i] - pts[k]).normalized();
                    CHECK(yij.dot(yik) ==
                          doctest::Approx(j == k ? 1.0 : 0.5).epsilon(1e-12));
                }
    }
}

TEST_CASE("limit framework of a two-part line partition is an orientation") {
    Graph g(2, {{0, 1}});
    RigidPartition rp;
    rp.d = 1;
    rp.parts = {{0}, {1}};
    rp.edge_colours[{0, 1}] = {{0, 1}};
    VerifyResult res = verify_rigid_partition(g, rp);
    REQUIRE(res.accepted);
    LimitFramework lf = limit_framework_from_partition(g, rp, res.hierarchy);
    CHECK(lf.fw.dim == 1);
    CHECK(lf.fw.antisymmetric());
    CHECK(std::fabs(lf.fw.vec_first[0](0)) == doctest::Approx(1.0));
    StiffnessPair s = stiffness_matrices(lf.fw);
    SymMatrix lap = laplacian_matrix(g);
    CHECK((s.upper - lap).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("limit framework of the K4 partition") {
    CutHierarchy h;
    RigidPartition rp = accepted_k4_partition(&h);
    Graph k4 = Graph::complete(4);
    LimitFramework lf = limit_framework_from_partition(k4, rp, h);
    REQUIRE(lf.fw.graph.edge_count() == 6);
    CHECK(lf.fw.antisymmetric());
    for (int ei = 0; ei < 6; ++ei) {
        CHECK(lf.fw.vec_first[ei].norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(lf.fw.vec_second[ei].norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    auto pts = regular_simplex(2);
    for (int ei = 0; ei < 6; ++ei) {
        auto [i, j] = lf.edge_colour[ei];
        Eigen::VectorXd y = (pts[i] - pts[j]).normalized();
        double dot = std::fabs(lf.fw.vec_first[ei].dot(y));
        CHECK(dot == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("corrupted hierarchies are rejected") {
    CutHierarchy h;
    RigidPartition rp = accepted_k4_partition(&h);
    Graph k4 = Graph::complete(4);
    REQUIRE(h.per_part[0].root >= 0);
    h.per_part[0].nodes[h.per_part[0].root].colour = 1;
    CHECK_THROWS_WITH_AS(limit_framework_from_partition(k4, rp, h),
                         doctest::Contains("InvalidCertificate"), Error);
}

TEST_CASE("bound check on the edge and on K4") {
    Graph k2 = Graph::complete(2);
    RigidPartition rp;
    rp.d = 1;
    rp.parts = {{0}, {1}};
    rp.edge_colours[{0, 1}] = {{0, 1}};
    VerifyResult res = verify_rigid_partition(k2, rp);
    REQUIRE(res.accepted);
    BoundReport br = quantitative_bound_check(k2, rp, res.hierarchy);
    CHECK(br.min_half_a == doctest::Approx(1.0));
    CHECK(br.lambda_value == doctest::Approx(2.0));
    CHECK(br.holds);

    CutHierarchy h;
    RigidPartition k4rp = accepted_k4_partition(&h);
    Graph k4 = Graph::complete(4);
    BoundReport b4 = quantitative_bound_check(k4, k4rp, h);
    CHECK(b4.per_pair_a[{0, 1}] == doctest::Approx(2.0)); // a(C_4)
    CHECK(b4.per_pair_a[{0, 2}] == doctest::Approx(2.0)); // a(K_2)
    CHECK(b4.per_pair_a[{1, 2}] == doctest::Approx(2.0));
    CHECK(b4.min_half_a == doctest::Approx(1.0));
    CHECK(b4.lambda_value >= 1.0 - 1e-9);
    CHECK(b4.holds);
    CHECK(b4.mt_deviation <= 1e-12);
}

TEST_CASE("bound check reports an edge deficit") {
    // a path cannot carry the d=2 rank bound (3 coloured edges < 5); such a
    // partition is never accepted, so the hierarchies are built directly
    Graph p4 = Graph::path(4);
    RigidPartition rp;
    rp.d = 2;
    rp.parts = {{0, 1}, {2, 3}, {}};
    rp.edge_colours[{0, 1}] = {{1, 2}};
    rp.edge_colours[{0, 2}] = {{0, 1}};
    rp.edge_colours[{1, 2}] = {{2, 3}};
    CutHierarchy h;
    for (int i = 0; i <= 2; ++i) {
        auto tree = find_cut_hierarchy(p4, rp, i);
        REQUIRE(tree.has_value());
        h.per_part.push_back(*tree);
    }
    CHECK_THROWS_WITH_AS(quantitative_bound_check(p4, rp, h),
                         doctest::Contains("EdgeDeficit"), Error);
}

TEST_CASE("accepted partitions on small random graphs satisfy the bound") {
    Rng rng(81, 0);
    int done = 0;
    for (int rep = 0; rep < 200 && done < 25; ++rep) {
        int d = 1 + static_cast<int>(rng.next_below(3));
        int n = std::min(8, (d + 1) * 2 + static_cast<int>(rng.next_below(3)));
        Graph g = gnp(n, 0.75, rng.next_u64());
        StrongPartition sp;
        sp.kind = StrongKind::TypeII;
        sp.d = d;
        sp.parts.assign(d + 1, {});
        for (int v = 0; v < n; ++v) sp.parts[v % (d + 1)].push_back(v);
        if (!verify_strong(g, sp)) continue;
        RigidPartition rp = convert_to_rigid_partition(g, sp);
        VerifyResult res = verify_rigid_partition(g, rp);
        if (!res.accepted) continue;
        ++done;
        BoundReport br = quantitative_bound_check(g, rp, res.hierarchy);
        CHECK(br.holds);
        CHECK(br.mt_deviation <= 1e-12);
        // both eigenvalue routes agree
        CHECK(br.lambda_value == doctest::Approx(br.lambda_upper).epsilon(1e-7));
    }
    CHECK(done > 0);
}
