#include "rlab/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rlab/modular.hpp"

namespace rlab {

Eigen::MatrixXd rigidity_matrix(const Graph& g, const Embedding& p) {
    const int n = g.vertex_count();
    const int d = p.dim;
    require(static_cast<int>(p.coords.size()) == n, "StructuralError",
            "embedding must cover every vertex");
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(g.edge_count(), static_cast<long>(d) * n);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edges()[ei];
        Eigen::VectorXd diff = p.coords[e.first] - p.coords[e.second];
        R.block(ei, static_cast<long>(d) * e.first, 1, d) = diff.transpose();
        R.block(ei, static_cast<long>(d) * e.second, 1, d) = -diff.transpose();
    }
    return R;
}

bool GeneralizedFramework::antisymmetric(double tol) const {
    for (int ei = 0; ei < graph.edge_count(); ++ei)
        if ((vec_first[ei] + vec_second[ei]).lpNorm<Eigen::Infinity>() > tol) return false;
    return true;
}

GeneralizedFramework normalized_framework(const Graph& g, const Embedding& p) {
    GeneralizedFramework fw;
    fw.dim = p.dim;
    fw.graph = g;
    fw.vec_first.resize(g.edge_count());
    fw.vec_second.resize(g.edge_count());
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edges()[ei];
        Eigen::VectorXd diff = p.coords[e.first] - p.coords[e.second];
        double norm = diff.norm();
        require(norm > 0.0, "StructuralError", "adjacent vertices coincide");
        fw.vec_first[ei] = diff / norm;
        fw.vec_second[ei] = -fw.vec_first[ei];
    }
    return fw;
}

namespace {

Eigen::MatrixXd normalized_rigidity(const GeneralizedFramework& fw) {
    const int d = fw.dim;
    const int n = fw.graph.vertex_count();
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(static_cast<long>(d) * n, fw.graph.edge_count());
    for (int ei = 0; ei < fw.graph.edge_count(); ++ei) {
        const Edge& e = fw.graph.edges()[ei];
        R.block(static_cast<long>(d) * e.first, ei, d, 1) = fw.vec_first[ei];
        R.block(static_cast<long>(d) * e.second, ei, d, 1) = fw.vec_second[ei];
    }
    return R;
}

} // namespace

StiffnessPair stiffness_matrices(const GeneralizedFramework& fw) {
    Eigen::MatrixXd R = normalized_rigidity(fw);
    StiffnessPair out;
    out.upper = R * R.transpose();
    out.lower = R.transpose() * R;
    return out;
}

SymMatrix lower_stiffness_closed_form(const GeneralizedFramework& fw) {
    const Graph& g = fw.graph;
    int m = g.edge_count();
    SymMatrix L = SymMatrix::Zero(m, m);
    for (int a = 0; a < m; ++a) {
        L(a, a) = 2.0;
        for (int b = a + 1; b < m; ++b) {
            const Edge& e1 = g.edges()[a];
            const Edge& e2 = g.edges()[b];
            int shared = -1;
            if (e1.first == e2.first || e1.first == e2.second) shared = e1.first;
            else if (e1.second == e2.first || e1.second == e2.second) shared = e1.second;
            if (shared < 0) continue;
            const Eigen::VectorXd& q1 = (shared == e1.first) ? fw.vec_first[a] : fw.vec_second[a];
            const Eigen::VectorXd& q2 = (shared == e2.first) ? fw.vec_first[b] : fw.vec_second[b];
            double dot = q1.dot(q2);
            L(a, b) = dot;
            L(b, a) = dot;
        }
    }
    return L;
}

double algebraic_connectivity(const Graph& g) {
    require(g.vertex_count() >= 1, "EmptyGraph", "algebraic connectivity needs a vertex");
    if (g.vertex_count() == 1) return std::numeric_limits<double>::infinity();
    Spectrum s = eigenvalues_sym(laplacian_matrix(g));
    return kth_smallest(s, 2);
}

std::vector<Eigen::VectorXd> regular_simplex(int d) {
    require(d >= 1, "StructuralError", "dimension must be at least 1");
    // e_1..e_d plus alpha*(1,..,1) with alpha = (1-sqrt(d+1))/d gives pairwise
    // distance sqrt(2); recentre at the centroid.
    std::vector<Eigen::VectorXd> pts(d + 1, Eigen::VectorXd::Zero(d));
    for (int i = 0; i < d; ++i) pts[i](i) = 1.0;
    double alpha = (1.0 - std::sqrt(static_cast<double>(d + 1))) / d;
    pts[d] = Eigen::VectorXd::Constant(d, alpha);
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (const auto& x : pts) centroid += x;
    centroid /= (d + 1);
    for (auto& x : pts) x -= centroid;
    return pts;
}

namespace {

constexpr uint32_t kP = kDefaultPrime;
constexpr int kCompressSlack = 16;

inline uint32_t sub_mod(uint32_t a, uint32_t b) { return a >= b ? a - b : a + kP - b; }

inline uint32_t fold31(uint64_t x) {
    x = (x & kP) + (x >> 31);
    x = (x & kP) + (x >> 31);
    uint32_t r = static_cast<uint32_t>(x);
    if (r >= kP) r -= kP;
    return r;
}

// Rank of the rigidity matrix at a uniform random embedding over GF(2^31-1).
// When there are many more edges than the target rank, the rows are first
// compressed by a random (r+slack) x |E| matrix; compression can only lower
// the rank, so the certificate stays one-sided.
long long rigidity_rank_trial(const Graph& g, int d, uint64_t trial_seed) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const long long cols = static_cast<long long>(d) * n;
    const long long r_req = required_rigidity_rank(n, d);
    if (m == 0) return 0;

    Rng coord_rng(trial_seed, 1);
    std::vector<uint32_t> coords(static_cast<size_t>(n) * d);
    for (auto& c : coords) c = random_residue(coord_rng, kP);

    std::vector<uint32_t> dir(static_cast<size_t>(m) * d);
    for (int ei = 0; ei < m; ++ei) {
        const Edge& e = g.edges()[ei];
        for (int c = 0; c < d; ++c)
            dir[static_cast<size_t>(ei) * d + c] =
                sub_mod(coords[static_cast<size_t>(e.first) * d + c],
                        coords[static_cast<size_t>(e.second) * d + c]);
    }

    const bool compress = m > r_req + kCompressSlack;
    const int rows = compress ? static_cast<int>(r_req + kCompressSlack) : m;
    std::vector<uint32_t> mat(static_cast<size_t>(rows) * cols, 0);

    if (!compress) {
        for (int ei = 0; ei < m; ++ei) {
            const Edge& e = g.edges()[ei];
            uint32_t* row = &mat[static_cast<size_t>(ei) * cols];
            for (int c = 0; c < d; ++c) {
                uint32_t w = dir[static_cast<size_t>(ei) * d + c];
                row[static_cast<size_t>(e.first) * d + c] = w;
                row[static_cast<size_t>(e.second) * d + c] = w ? kP - w : 0;
            }
        }
    } else {
        for (int r = 0; r < rows; ++r) {
            Rng row_rng(trial_seed, 0x1000 + static_cast<uint64_t>(r));
            uint32_t* row = &mat[static_cast<size_t>(r) * cols];
            for (int ei = 0; ei < m; ++ei) {
                const Edge& e = g.edges()[ei];
                uint64_t t = random_residue(row_rng, kP);
                if (t == 0) continue;
                uint32_t* bu = row + static_cast<size_t>(e.first) * d;
                uint32_t* bv = row + static_cast<size_t>(e.second) * d;
                const uint32_t* w = &dir[static_cast<size_t>(ei) * d];
                for (int c = 0; c < d; ++c) {
                    bu[c] = fold31(bu[c] + t * w[c]);
                    bv[c] = fold31(bv[c] + t * (w[c] ? kP - w[c] : 0));
                }
            }
        }
    }
    return rank_m31_inplace(mat, rows, static_cast<int>(cols));
}

} // namespace

RigidityVerdict randomized_rigidity_test(const Graph& g, int d, int trials, uint64_t seed) {
    require(d >= 1, "StructuralError", "dimension must be at least 1");
    require(trials >= 1, "StructuralError", "need at least one trial");
    require(g.vertex_count() >= d + 1, "TooFewVertices",
            "the rank bound needs at least d+1 vertices");

    RigidityVerdict v;
    v.required_rank = required_rigidity_rank(g.vertex_count(), d);
    Rng master(seed, 7);
    for (int t = 0; t < trials; ++t) {
        ++v.trials;
        long long rank = rigidity_rank_trial(g, d, master.derive(t));
        require(rank <= v.required_rank, "StructuralError",
                "field rank exceeded the rigidity rank bound");
        v.observed_rank = std::max(v.observed_rank, rank);
        if (v.observed_rank == v.required_rank) {
            v.kind = RigidityKind::RigidCertified;
            break;
        }
    }
    return v;
}

RigidityNumberResult rigidity_number(const Graph& g, int trials, uint64_t seed,
                                     bool full_scan) {
    RigidityNumberResult res;
    if (!is_connected(g)) return res;
    bool seen_flexible = false;
    for (int d = 1; d <= g.vertex_count() - 1; ++d) {
        RigidityVerdict v = randomized_rigidity_test(g, d, trials, Rng::mix(seed) + d);
        res.by_dim.push_back(v);
        if (v.certified()) {
            if (seen_flexible) res.nonmonotone = true;
            else res.number = d;
        } else {
            if (!full_scan) break;
            seen_flexible = true;
        }
    }
    return res;
}

LimitFramework limit_framework_from_partition(const Graph& g, const RigidPartition& rp,
                                              const CutHierarchy& cert) {
    std::string why;
    require(hierarchy_is_valid(g, rp, cert, &why), "InvalidCertificate",
            "cut hierarchy failed validation: " + why);

    const int d = rp.d;
    LimitFramework lf;
    lf.part_of.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < rp.parts.size(); ++i)
        for (int v : rp.parts[i]) lf.part_of[v] = static_cast<int>(i);

    // Edge list of (V, Ê) with each edge's colour pair.
    std::vector<Edge> hat;
    std::map<Edge, std::pair<int, int>> colour_of;
    for (const auto& [key, edges] : rp.edge_colours) {
        for (const Edge& e : edges) {
            hat.push_back(e);
            colour_of[e] = key;
        }
    }
    std::sort(hat.begin(), hat.end());
    Graph span(g.vertex_count(), hat);

    // Signs of within-part edges from the hierarchy: +1 at the endpoint lying
    // in the left child of the node where the two endpoints separate.
    std::map<Edge, int> sign_at_first;
    for (size_t i = 0; i < rp.parts.size(); ++i) {
        const CutTree& tree = cert.per_part[i];
        if (tree.root < 0) continue;
        std::vector<int> stack = {tree.root};
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            const auto& node = tree.nodes[id];
            if (node.left < 0) continue;
            stack.push_back(node.left);
            stack.push_back(node.right);
            const auto& L = tree.nodes[node.left].members;
            const auto& R = tree.nodes[node.right].members;
            for (const Edge& e : span.edges()) {
                bool ul = std::binary_search(L.begin(), L.end(), e.first);
                bool vl = std::binary_search(L.begin(), L.end(), e.second);
                bool ur = std::binary_search(R.begin(), R.end(), e.first);
                bool vr = std::binary_search(R.begin(), R.end(), e.second);
                if (ul && vr) sign_at_first[e] = +1;
                else if (ur && vl) sign_at_first[e] = -1;
            }
        }
    }

    auto simplex = regular_simplex(d);
    auto direction = [&](int a, int b) {
        Eigen::VectorXd diff = simplex[a] - simplex[b];
        return Eigen::VectorXd(diff / diff.norm());
    };

    lf.fw.dim = d;
    lf.fw.graph = span;
    lf.fw.vec_first.resize(span.edge_count());
    lf.fw.vec_second.resize(span.edge_count());
    lf.edge_colour.resize(span.edge_count());
    lf.eta_first.resize(span.edge_count());
    lf.eta_second.resize(span.edge_count());

    for (int ei = 0; ei < span.edge_count(); ++ei) {
        const Edge& e = span.edges()[ei];
        auto [ci, cj] = colour_of[e];
        lf.edge_colour[ei] = {ci, cj};
        int pu = lf.part_of[e.first];
        int pv = lf.part_of[e.second];
        if (pu != pv) {
            // cross edge: q(u,e) = y_{pu,pv}, both signs positive
            Eigen::VectorXd y = direction(pu, pv);
            lf.fw.vec_first[ei] = y;
            lf.fw.vec_second[ei] = -y;
            lf.eta_first[ei] = +1;
            lf.eta_second[ei] = +1;
        } else {
            int other = (pu == ci) ? cj : ci;
            auto it = sign_at_first.find(e);
            require(it != sign_at_first.end(), "InvalidCertificate",
                    "hierarchy never separates the endpoints of an edge");
            int sgn = it->second;
            Eigen::VectorXd y = direction(pu, other);
            lf.fw.vec_first[ei] = sgn > 0 ? y : Eigen::VectorXd(-y);
            lf.fw.vec_second[ei] = sgn > 0 ? Eigen::VectorXd(-y) : y;
            lf.eta_first[ei] = sgn;
            lf.eta_second[ei] = -sgn;
        }
    }
    return lf;
}

BoundReport quantitative_bound_check(const Graph& g, const RigidPartition& rp,
                                     const CutHierarchy& cert, double tol) {
    const int d = rp.d;
    const int n = g.vertex_count();
    BoundReport report;
    report.tol = tol;

    // a(G_ij) for every pair; pairs with a single vertex contribute infinity.
    double min_half = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            std::vector<int> verts;
            std::merge(rp.parts[i].begin(), rp.parts[i].end(), rp.parts[j].begin(),
                       rp.parts[j].end(), std::back_inserter(verts));
            auto it = rp.edge_colours.find({i, j});
            std::vector<int> local(n, -1);
            for (size_t t = 0; t < verts.size(); ++t) local[verts[t]] = static_cast<int>(t);
            std::vector<Edge> les;
            if (it != rp.edge_colours.end())
                for (const Edge& e : it->second)
                    les.push_back(make_edge(local[e.first], local[e.second]));
            Graph gij(static_cast<int>(verts.size()), std::move(les));
            double a = gij.vertex_count() == 0 ? 0.0 : algebraic_connectivity(gij);
            report.per_pair_a[{i, j}] = a;
            min_half = std::min(min_half, a / 2.0);
        }
    }
    report.min_half_a = min_half;

    LimitFramework lf = limit_framework_from_partition(g, rp, cert);
    const long long hat_edges = lf.fw.graph.edge_count();
    const long long deficit_floor = required_rigidity_rank(n, d);
    require(hat_edges >= deficit_floor, "EdgeDeficit",
            "too few coloured edges for the rank bound");

    StiffnessPair stiff = stiffness_matrices(lf.fw);
    report.m_index = hat_edges - static_cast<long long>(d) * n +
                     static_cast<long long>(d + 1) * d / 2 + 1;

    const long long upper_index = static_cast<long long>(d + 1) * d / 2 + 1;
    if (report.m_index > hat_edges) {
        report.lambda_value = std::numeric_limits<double>::infinity();
        report.lambda_upper = std::numeric_limits<double>::infinity();
    } else {
        Spectrum s = eigenvalues_sym(stiff.lower);
        report.lambda_value = kth_smallest(s, static_cast<int>(report.m_index));
        // the same eigenvalue through the other route: L and L- share their
        // nonzero spectra, shifted by |E| - d n
        Spectrum su = eigenvalues_sym(stiff.upper);
        report.lambda_upper = kth_smallest(su, static_cast<int>(upper_index));
    }

    // L- = (M + T)/2 entrywise, with M and T built from the signs alone.
    const Graph& span = lf.fw.graph;
    const int m = span.edge_count();
    SymMatrix M = SymMatrix::Zero(m, m);
    SymMatrix T = SymMatrix::Zero(m, m);
    auto eta_at = [&](int ei, int v) {
        return span.edges()[ei].first == v ? lf.eta_first[ei] : lf.eta_second[ei];
    };
    for (int a = 0; a < m; ++a) {
        M(a, a) = 2.0;
        T(a, a) = 2.0;
        for (int b = a + 1; b < m; ++b) {
            const Edge& e1 = span.edges()[a];
            const Edge& e2 = span.edges()[b];
            int shared = -1;
            if (e1.first == e2.first || e1.first == e2.second) shared = e1.first;
            else if (e1.second == e2.first || e1.second == e2.second) shared = e1.second;
            if (shared < 0) continue;
            double prod = eta_at(a, shared) * eta_at(b, shared);
            M(a, b) = M(b, a) = prod;
            if (lf.edge_colour[a] == lf.edge_colour[b]) T(a, b) = T(b, a) = prod;
        }
    }
    report.mt_deviation = (stiff.lower - 0.5 * (M + T)).lpNorm<Eigen::Infinity>();

    if (std::isinf(report.min_half_a) || std::isinf(report.lambda_value))
        report.holds = std::isinf(report.lambda_value) || report.min_half_a <= report.lambda_value;
    else
        report.holds = report.lambda_value >= report.min_half_a - tol;
    return report;
}

} // namespace rlab
