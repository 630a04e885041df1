#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle_rational.hpp"
#include "rlab/modular.hpp"
#include "rlab/rng.hpp"
#include "rlab/spectra.hpp"

using namespace rlab;

TEST_CASE("rank over the prime field on fixed matrices") {
    PrimeFieldMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(rank_mod_p(id) == 3);

    PrimeFieldMatrix zero(2, 3);
    CHECK(rank_mod_p(zero) == 0);

    PrimeFieldMatrix dep(2, 3);
    long long rows[2][3] = {{1, 2, 3}, {2, 4, 6}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) dep.set_signed(r, c, rows[r][c]);
    CHECK(rank_mod_p(dep) == 1);
}

namespace {

PrimeFieldMatrix random_matrix(Rng& rng, int rows, int cols, int span, uint32_t p) {
    PrimeFieldMatrix m(rows, cols, p);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set_signed(r, c, static_cast<long long>(rng.next_below(2 * span + 1)) - span);
    return m;
}

} // namespace

TEST_CASE("rank is invariant under row swaps, scaling and transposition") {
    Rng rng(3, 0);
    for (int rep = 0; rep < 40; ++rep) {
        int rows = 1 + static_cast<int>(rng.next_below(6));
        int cols = 1 + static_cast<int>(rng.next_below(6));
        PrimeFieldMatrix m = random_matrix(rng, rows, cols, 9, kDefaultPrime);
        int base = rank_mod_p(m);

        PrimeFieldMatrix swapped = m;
        int r1 = static_cast<int>(rng.next_below(rows));
        int r2 = static_cast<int>(rng.next_below(rows));
        for (int c = 0; c < cols; ++c) std::swap(swapped.at(r1, c), swapped.at(r2, c));
        CHECK(rank_mod_p(swapped) == base);

        PrimeFieldMatrix scaled = m;
        uint64_t factor = 1 + rng.next_below(kDefaultPrime - 1);
        int row = static_cast<int>(rng.next_below(rows));
        for (int c = 0; c < cols; ++c)
            scaled.at(row, c) =
                static_cast<uint32_t>(factor * scaled.at(row, c) % kDefaultPrime);
        CHECK(rank_mod_p(scaled) == base);

        PrimeFieldMatrix transposed(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) transposed.at(c, r) = m.at(r, c);
        CHECK(rank_mod_p(transposed) == base);
    }
}

TEST_CASE("field rank never exceeds the rational rank") {
    Rng rng(5, 0);
    for (int rep = 0; rep < 60; ++rep) {
        int rows = 1 + static_cast<int>(rng.next_below(8));
        int cols = 1 + static_cast<int>(rng.next_below(8));
        std::vector<std::vector<oracle::BigInt>> big(rows,
                                                     std::vector<oracle::BigInt>(cols));
        PrimeFieldMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                long long v = static_cast<long long>(rng.next_below(21)) - 10;
                big[r][c] = v;
                m.set_signed(r, c, v);
            }
        CHECK(rank_mod_p(m) <= oracle::rational_rank(big));
    }
}

TEST_CASE("rank agrees with a non-default prime") {
    PrimeFieldMatrix m(2, 2, 97);
    m.set_signed(0, 0, 96);
    m.set_signed(0, 1, 1);
    m.set_signed(1, 0, -1);
    m.set_signed(1, 1, -96); // second row = 96 * first mod 97
    CHECK(rank_mod_p(m) == 1);
}

TEST_CASE("eigenvalues of fixed symmetric matrices") {
    SymMatrix d = SymMatrix::Zero(2, 2);
    d(1, 1) = 2.0;
    Spectrum s = eigenvalues_sym(d);
    CHECK(s.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.values[1] == doctest::Approx(2.0));

    // cycle Laplacian eigenvalues are 2 - 2cos(2 pi k / n)
    Spectrum c4 = eigenvalues_sym(laplacian_matrix(Graph::cycle(4)));
    std::vector<double> expect = {0.0, 2.0, 2.0, 4.0};
    REQUIRE(c4.order() == 4);
    for (int k = 0; k < 4; ++k)
        CHECK(c4.values[k] == doctest::Approx(expect[k]).epsilon(1e-9));

    Spectrum k2 = eigenvalues_sym(laplacian_matrix(Graph::complete(2)));
    CHECK(k2.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(k2.values[1] == doctest::Approx(2.0));
}

TEST_CASE("eigenvalue sums preserve the trace") {
    Rng rng(9, 0);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 1 + static_cast<int>(rng.next_below(12));
        SymMatrix m(n, n);
        double maxabs = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = 20.0 * rng.next_unit() - 10.0;
                m(i, j) = m(j, i) = v;
                maxabs = std::max(maxabs, std::fabs(v));
            }
        Spectrum s = eigenvalues_sym(m);
        double sum = 0.0;
        for (double v : s.values) sum += v;
        CHECK(std::fabs(sum - m.trace()) <= 1e-9 * n * std::max(1.0, maxabs) + 1e-12);
    }
}

TEST_CASE("gram matrices are numerically positive semidefinite") {
    Rng rng(21, 0);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 1 + static_cast<int>(rng.next_below(10));
        int k = 1 + static_cast<int>(rng.next_below(10));
        Eigen::MatrixXd a(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) a(i, j) = 2.0 * rng.next_unit() - 1.0;
        SymMatrix gram = a * a.transpose();
        Spectrum s = eigenvalues_sym(gram);
        CHECK(s.values[0] >= -1e-9 * n * gram.cwiseAbs().maxCoeff() - 1e-12);
    }
}

TEST_CASE("non-finite entries are rejected") {
    SymMatrix m = SymMatrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(eigenvalues_sym(m), doctest::Contains("NonFinite"), Error);
}

TEST_CASE("kth_smallest indexing") {
    Spectrum s;
    s.values = {0.0, 2.0, 2.0, 4.0};
    CHECK(kth_smallest(s, 2) == 2.0);
    CHECK(kth_smallest(s, 4) == 4.0);
    CHECK_THROWS_WITH_AS(kth_smallest(s, 0), doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(kth_smallest(s, 5), doctest::Contains("IndexOutOfRange"), Error);
    Spectrum one;
    one.values = {0.0};
    CHECK(kth_smallest(one, 1) == 0.0);
}
