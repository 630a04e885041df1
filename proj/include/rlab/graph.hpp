#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlab/errors.hpp"

namespace rlab {

using Edge = std::pair<int, int>; // normalized u < v

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Set of vertex ids within a host graph's range, kept sorted and unique.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(std::vector<int> members);

    const std::vector<int>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;

    static VertexSubset full(int n);
    VertexSubset with(int v) const;           // union with {v}
    VertexSubset unite(const VertexSubset& other) const;
    bool disjoint_from(const VertexSubset& other) const;

    bool operator==(const VertexSubset& other) const { return members_ == other.members_; }

private:
    std::vector<int> members_;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency is stored both as a sorted edge list (canonical order for
// serialization) and per-vertex sorted neighbour lists (fast scans).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    static Graph complete(int n);
    static Graph complete_bipartite(int m, int n); // sides [0,m) and [m,m+n)
    static Graph cycle(int n);
    static Graph path(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Bipartite host: the underlying graph plus the two sides. Every edge must
// cross the bipartition.
struct BipartiteGraph {
    Graph graph;
    VertexSubset part_a;
    VertexSubset part_b;

    BipartiteGraph() = default;
    BipartiteGraph(Graph g, VertexSubset a, VertexSubset b);
};

// G[A,B] with the vertex set relabelled to 0..|A∪B|-1; `vertices` maps the
// new ids back to the host graph's ids (ascending).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;
};

// G[A,B]: vertex set A∪B, edges with one endpoint in A and the other in B.
// A and B must be equal or disjoint; any other overlap is rejected.
InducedSubgraph induced_pair(const Graph& g, const VertexSubset& a, const VertexSubset& b);

// Connected components as vertex lists (each sorted, ordered by smallest member).
std::vector<std::vector<int>> connected_components(const Graph& g);

// The graph without vertices counts as disconnected; a single vertex is connected.
bool is_connected(const Graph& g);

// s dominates g and g[s] is connected.
bool is_cds(const Graph& g, const VertexSubset& s);

VertexSubset common_neighbours(const Graph& g, int u, int v);

// e(A,B): ordered pairs (u,v) in A×B with {u,v} an edge. For overlapping A,B
// this can exceed |E(A,B)|.
long long ordered_cross_pairs(const Graph& g, const VertexSubset& a, const VertexSubset& b);

// Exact clique number by branch and bound; intended for n <= 25 or so.
int clique_number(const Graph& g);

// Finds the lexicographically smallest k-clique, or empty if none exists.
std::vector<int> first_clique(const Graph& g, int k);

// Text format: first non-comment line "n m", then m lines "u v" with
// 0 <= u < v < n; '#' starts a comment. write_graph_text emits the canonical
// form (edges sorted lexicographically), so write(parse(s)) == s on canonical
// input and parse(write(g)) == g always.
std::string write_graph_text(const Graph& g);
Graph parse_graph_text(const std::string& text);

} // namespace rlab
