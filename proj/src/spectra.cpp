#include "rlab/spectra.hpp"

#include <cmath>

namespace rlab {

Spectrum eigenvalues_sym(const SymMatrix& m, double tol) {
    require(tol > 0.0, "StructuralError", "tolerance must be positive");
    require(m.rows() == m.cols(), "StructuralError", "matrix must be square");
    require(m.allFinite(), "NonFinite", "matrix entries must be finite");
    Spectrum s;
    s.tolerance = tol;
    if (m.rows() == 0) return s;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, "NonFinite", "eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    s.values.assign(ev.data(), ev.data() + ev.size());
    return s;
}

double kth_smallest(const Spectrum& s, int k) {
    require(k >= 1 && k <= s.order(), "IndexOutOfRange",
            "eigenvalue index must lie in [1, order]");
    return s.values[static_cast<size_t>(k - 1)];
}

SymMatrix laplacian_matrix(const Graph& g) {
    int n = g.vertex_count();
    SymMatrix L = SymMatrix::Zero(n, n);
    for (const Edge& e : g.edges()) {
        L(e.first, e.first) += 1.0;
        L(e.second, e.second) += 1.0;
        L(e.first, e.second) -= 1.0;
        L(e.second, e.first) -= 1.0;
    }
    return L;
}

} // namespace rlab
