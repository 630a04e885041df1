#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "rlab/graph.hpp"
#include "rlab/partition.hpp"
#include "rlab/spectra.hpp"

namespace rlab {

// Point placement of the vertices in R^dim.
struct Embedding {
    int dim = 0;
    std::vector<Eigen::VectorXd> coords; // one per vertex
};

inline long long required_rigidity_rank(int n, int d) {
    return static_cast<long long>(d) * n - static_cast<long long>(d + 1) * d / 2;
}

// |E| x d*n matrix; the row of {u,v} carries p(u)-p(v) in u's block and the
// negation in v's block.
Eigen::MatrixXd rigidity_matrix(const Graph& g, const Embedding& p);

// Unit vectors assigned to (vertex, incident edge) pairs. vec_first/vec_second
// follow the edge list order of `graph` and belong to e.first / e.second.
struct GeneralizedFramework {
    int dim = 0;
    Graph graph;
    std::vector<Eigen::VectorXd> vec_first;
    std::vector<Eigen::VectorXd> vec_second;

    bool antisymmetric(double tol = 0.0) const; // q(u,e) == -q(v,e)
};

// Normalized edge directions of an embedding (adjacent vertices must not coincide).
GeneralizedFramework normalized_framework(const Graph& g, const Embedding& p);

// L = R^ R^T (d*n square) and the lower stiffness L- = R^T R^ (|E| square).
struct StiffnessPair {
    SymMatrix upper; // d*n x d*n
    SymMatrix lower; // |E| x |E|
};
StiffnessPair stiffness_matrices(const GeneralizedFramework& fw);

// Entrywise form of the lower stiffness matrix: 2 on the diagonal,
// q(u,e1).q(u,e2) when e1 and e2 share exactly the vertex u, else 0.
SymMatrix lower_stiffness_closed_form(const GeneralizedFramework& fw);

// lambda_2 of the Laplacian; infinity for the one-vertex graph.
double algebraic_connectivity(const Graph& g);

// d+1 points in R^d, pairwise equidistant, centred at the origin. The
// normalized difference directions y_ij satisfy y_ij . y_ik = 1/2 for j != k.
std::vector<Eigen::VectorXd> regular_simplex(int d);

enum class RigidityKind { RigidCertified, ProbablyFlexible };

struct RigidityVerdict {
    RigidityKind kind = RigidityKind::ProbablyFlexible;
    long long observed_rank = 0;
    long long required_rank = 0;
    int trials = 0;

    bool certified() const { return kind == RigidityKind::RigidCertified; }
};

// One-sided certificate: samples embeddings with uniform coordinates in
// GF(2^31-1) and computes the exact field rank of the rigidity matrix. Field
// rank lower-bounds the rank at a rational point, so attaining
// d*n - C(d+1,2) certifies d-rigidity; anything less reports ProbablyFlexible
// with the best rank observed.
RigidityVerdict randomized_rigidity_test(const Graph& g, int d, int trials = 3,
                                         uint64_t seed = 1);

struct RigidityNumberResult {
    int number = 0;
    bool nonmonotone = false;             // only meaningful for full scans
    std::vector<RigidityVerdict> by_dim;  // index k holds the verdict at d=k+1
};

// Largest d with a certified verdict, scanning d upward and stopping at the
// first ProbablyFlexible. A full scan keeps going and flags any certified
// dimension above a flexible one.
RigidityNumberResult rigidity_number(const Graph& g, int trials = 3, uint64_t seed = 1,
                                     bool full_scan = false);

// Limit framework of an accepted partition: parts sit at the vertices of a
// regular simplex, cross edges point along y_ij, and edges inside a part get
// +-y_ij by walking the part's cut hierarchy. Signs are exact; the framework
// spans the subgraph (V, Ê).
struct LimitFramework {
    GeneralizedFramework fw;
    std::vector<std::pair<int, int>> edge_colour; // per edge of fw.graph, (i,j) i<j
    std::vector<int> eta_first;                   // sign of q at e.first (+1/-1)
    std::vector<int> eta_second;
    std::vector<int> part_of;                     // vertex -> part index
};

LimitFramework limit_framework_from_partition(const Graph& g, const RigidPartition& rp,
                                              const CutHierarchy& cert);

struct BoundReport {
    double min_half_a = 0.0;  // min over pairs of a(G_ij)/2
    double lambda_value = 0.0;
    double lambda_upper = 0.0; // same eigenvalue read off L at index C(d+1,2)+1
    bool holds = false;
    std::map<std::pair<int, int>, double> per_pair_a;
    long long m_index = 0;      // eigenvalue index used on the lower stiffness
    double mt_deviation = 0.0;  // max |L- - (M+T)/2| entry
    double tol = 0.0;
};

constexpr double kDefaultBoundTol = 1e-8;

// Evaluates the spectral lower bound of the accepted partition on the
// subgraph spanned by the coloured edges, and cross-checks the lower
// stiffness matrix against its (M+T)/2 decomposition.
BoundReport quantitative_bound_check(const Graph& g, const RigidPartition& rp,
                                     const CutHierarchy& cert,
                                     double tol = kDefaultBoundTol);

} // namespace rlab
