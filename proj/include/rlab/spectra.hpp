#pragma once

#include <vector>

#include <Eigen/Dense>

#include "rlab/errors.hpp"
#include "rlab/graph.hpp"

namespace rlab {

using SymMatrix = Eigen::MatrixXd; // callers keep these symmetric as stored

// Ascending eigenvalues of a symmetric matrix plus the tolerance they were
// computed to. Consumers compare against thresholds with this tolerance;
// multiplicities are never counted exactly.
struct Spectrum {
    std::vector<double> values; // ascending
    double tolerance = 0.0;

    int order() const { return static_cast<int>(values.size()); }
};

constexpr double kDefaultEigenTol = 1e-9;

// All eigenvalues, ascending, each within tol*(1+|lambda|) of the true value.
Spectrum eigenvalues_sym(const SymMatrix& m, double tol = kDefaultEigenTol);

// lambda_k, 1-indexed from the smallest.
double kth_smallest(const Spectrum& s, int k);

SymMatrix laplacian_matrix(const Graph& g);

} // namespace rlab
