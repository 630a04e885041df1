#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rlab/graph.hpp"

namespace rlab {

// Vertex colouring V_1..V_{d+1} plus a partial edge colouring {E_ij}.
// Parts and colour keys are 0-based internally; the JSON form uses 1-based
// part indices. Every edge of E_ij must have both endpoints in V_i ∪ V_j,
// colour classes are pairwise disjoint subsets of E(G).
struct RigidPartition {
    int d = 0;
    std::vector<std::vector<int>> parts;                    // size d+1, each sorted
    std::map<std::pair<int, int>, std::vector<Edge>> edge_colours; // key i<j

    int part_of(int v) const; // -1 if uncovered
    std::vector<Edge> all_coloured_edges() const;           // Ê, sorted
};

// Laminar certificate that every U inside a part admits a monochromatic cut.
// Nodes are stored in an arena per part; leaves are singletons. An internal
// node splits `members` into nodes `left` and `right`, and all coloured edges
// crossing the split lie in E_{i,colour}.
struct CutTree {
    struct Node {
        std::vector<int> members; // sorted
        int colour = -1;          // other part index, -1 for leaves
        int left = -1;
        int right = -1;
    };
    int root = -1; // -1 for parts with fewer than 2 vertices
    std::vector<Node> nodes;
};

struct CutHierarchy {
    std::vector<CutTree> per_part; // size d+1
};

struct VerifyResult {
    bool accepted = false;
    CutHierarchy hierarchy;
    std::string reason;                    // set when rejected
    std::vector<int> hierarchy_only_parts; // search accepted, subset oracle failed
};

// Checks connectivity of every G_ij = (V_i ∪ V_j, E_ij) (a vertexless graph
// counts as disconnected, so at most one part may be empty) and certifies the
// monochromatic-cut condition per part by backtracking over colours with
// finest-component splits and memoized failures. For parts with at most
// exact_threshold vertices the all-subsets oracle is run as well and
// divergences are reported (never as errors).
VerifyResult verify_rigid_partition(const Graph& g, const RigidPartition& rp,
                                    int exact_threshold = 0);

// Literal re-check of a hierarchy against the definition; used to keep the
// search honest and to validate certificates supplied from outside.
bool hierarchy_is_valid(const Graph& g, const RigidPartition& rp,
                        const CutHierarchy& h, std::string* why = nullptr);

// Exhaustive test of the monochromatic-cut property for part i: every
// U ⊆ V_i with |U| ≥ 2 and every bipartition of U. Capped at 12 vertices.
bool brute_force_cut_oracle(const Graph& g, const RigidPartition& rp, int part);

// Search the cut hierarchy of a single part (no connectivity checks).
std::optional<CutTree> find_cut_hierarchy(const Graph& g, const RigidPartition& rp, int part);

enum class StrongKind { TypeI, TypeII, Bipartite };

// Type I: d nonempty parts, G[V_i,V_j] connected for 1 ≤ i ≤ j ≤ d.
// Type II: d+1 nonempty parts, G[V_i,V_j] connected for i < j.
// Bipartite: d+1 parts of a bipartite host; G[A_i,B_j] connected for i ≠ j,
// plus forests F_i with nondecreasing scores s_i, partial sums ≥ C(k,2).
// When no forests are given, a matching of size d in each G[A_i,B_i] is the
// accepted sufficient condition (scores all equal to d).
struct StrongPartition {
    StrongKind kind = StrongKind::TypeI;
    int d = 0;
    std::vector<std::vector<int>> parts;
    VertexSubset side_a;                    // bipartite host side A (Bipartite only)
    std::vector<std::vector<Edge>> forests; // optional, size d+1
    std::vector<int> scores;                // optional, size d+1, nondecreasing
};

bool verify_strong(const Graph& g, const StrongPartition& sp);

// Tournament on vertices 0..size-1 given by the winner of every pair.
struct Tournament {
    int size = 0;
    std::map<std::pair<int, int>, int> winner; // key u<v, value u or v

    bool beats(int u, int v) const;
    std::vector<int> out_degrees() const;
};

// Tournament whose out-degree sequence equals `scores` (nondecreasing;
// partial sums at least C(k,2) with equality overall — Landau's condition).
Tournament landau_tournament(const std::vector<int>& scores);

// A family of C(d+1,2) pairwise disjoint connected dominating sets covering V.
struct CdsFamily {
    int d = 0;
    std::vector<std::vector<int>> sets;
};

RigidPartition convert_to_rigid_partition(const Graph& g, const StrongPartition& sp);
RigidPartition convert_to_rigid_partition(const Graph& g, const CdsFamily& family);

// Vertices lying in singleton parts must be pairwise adjacent, and there are
// at least 2d - |V| of them. True on every accepted partition.
bool singleton_clique_check(const Graph& g, const RigidPartition& rp);

// JSON forms: partition {"d":int,"parts":[[int]],"edge_colours":{"i,j":[[u,v]]}}
// with 1-based colour keys; hierarchy as nested arrays (leaf = vertex id,
// internal = [colour, left, right] with 1-based colour).
std::string rigid_partition_to_json(const RigidPartition& rp);
RigidPartition rigid_partition_from_json(const std::string& text);
std::string hierarchy_to_json(const CutHierarchy& h);
std::string strong_partition_to_json(const StrongPartition& sp);
StrongPartition strong_partition_from_json(const std::string& text);
std::string cds_family_to_json(const CdsFamily& f);
CdsFamily cds_family_from_json(const std::string& text);

} // namespace rlab
