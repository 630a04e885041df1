#include "rlab/graph.hpp"

#include <algorithm>
#include <sstream>

namespace rlab {

VertexSubset::VertexSubset(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSubset::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSubset VertexSubset::full(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return VertexSubset(std::move(all));
}

VertexSubset VertexSubset::with(int v) const {
    std::vector<int> m = members_;
    m.push_back(v);
    return VertexSubset(std::move(m));
}

VertexSubset VertexSubset::unite(const VertexSubset& other) const {
    std::vector<int> m;
    m.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(m));
    return VertexSubset(std::move(m));
}

bool VertexSubset::disjoint_from(const VertexSubset& other) const {
    auto it = members_.begin();
    auto jt = other.members_.begin();
    while (it != members_.end() && jt != other.members_.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else return false;
    }
    return true;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    require(n >= 0, "StructuralError", "negative vertex count");
    for (Edge& e : edges) {
        require(e.first != e.second, "StructuralError", "loop edge");
        if (e.first > e.second) std::swap(e.first, e.second);
        require(e.first >= 0 && e.second < n, "StructuralError", "edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, std::move(es));
}

Graph Graph::complete_bipartite(int m, int n) {
    std::vector<Edge> es;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) es.push_back({u, m + v});
    return Graph(m + n, std::move(es));
}

Graph Graph::cycle(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) es.push_back(make_edge(u, (u + 1) % n));
    return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
    std::vector<Edge> es;
    for (int u = 0; u + 1 < n; ++u) es.push_back({u, u + 1});
    return Graph(n, std::move(es));
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

BipartiteGraph::BipartiteGraph(Graph g, VertexSubset a, VertexSubset b)
    : graph(std::move(g)), part_a(std::move(a)), part_b(std::move(b)) {
    require(part_a.disjoint_from(part_b), "StructuralError", "bipartition sides overlap");
    require(static_cast<int>(part_a.size() + part_b.size()) == graph.vertex_count(),
            "StructuralError", "bipartition does not cover the vertex set");
    for (const Edge& e : graph.edges()) {
        bool ua = part_a.contains(e.first);
        bool va = part_a.contains(e.second);
        require(ua != va, "StructuralError", "edge inside one side of the bipartition");
    }
}

InducedSubgraph induced_pair(const Graph& g, const VertexSubset& a, const VertexSubset& b) {
    for (int v : a.members())
        require(v >= 0 && v < g.vertex_count(), "StructuralError", "subset vertex out of range");
    for (int v : b.members())
        require(v >= 0 && v < g.vertex_count(), "StructuralError", "subset vertex out of range");
    if (!(a == b))
        require(a.disjoint_from(b), "PartialOverlap",
                "vertex sets must be equal or disjoint");

    VertexSubset uni = a.unite(b);
    std::vector<int> local(g.vertex_count(), -1);
    const auto& verts = uni.members();
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);

    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        bool cross = (a.contains(e.first) && b.contains(e.second)) ||
                     (b.contains(e.first) && a.contains(e.second));
        if (cross) es.push_back(make_edge(local[e.first], local[e.second]));
    }
    return InducedSubgraph{Graph(static_cast<int>(verts.size()), std::move(es)), verts};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbours(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false; // vertexless convention
    return connected_components(g).size() == 1;
}

bool is_cds(const Graph& g, const VertexSubset& s) {
    for (int v : s.members())
        require(v >= 0 && v < g.vertex_count(), "StructuralError", "subset vertex out of range");
    InducedSubgraph sub = induced_pair(g, s, s);
    if (!is_connected(sub.graph)) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v)) continue;
        bool dominated = false;
        for (int w : g.neighbours(v)) {
            if (s.contains(w)) { dominated = true; break; }
        }
        if (!dominated) return false;
    }
    return true;
}

VertexSubset common_neighbours(const Graph& g, int u, int v) {
    require(u != v, "SameVertex", "common neighbourhood needs two distinct vertices");
    std::vector<int> out;
    const auto& nu = g.neighbours(u);
    const auto& nv = g.neighbours(v);
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
    return VertexSubset(std::move(out));
}

long long ordered_cross_pairs(const Graph& g, const VertexSubset& a, const VertexSubset& b) {
    long long count = 0;
    for (int u : a.members())
        for (int v : b.members())
            if (g.has_edge(u, v)) ++count;
    return count;
}

namespace {

void clique_search(const Graph& g, std::vector<int>& cand, int current, int& best) {
    if (current + static_cast<int>(cand.size()) <= best) return;
    if (cand.empty()) {
        best = std::max(best, current);
        return;
    }
    while (!cand.empty()) {
        if (current + static_cast<int>(cand.size()) <= best) return;
        int v = cand.back();
        cand.pop_back();
        std::vector<int> next;
        for (int w : cand)
            if (g.has_edge(v, w)) next.push_back(w);
        clique_search(g, next, current + 1, best);
    }
}

} // namespace

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    std::vector<int> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    int best = 1;
    clique_search(g, all, 0, best);
    return best;
}

namespace {

bool extend_clique(const Graph& g, std::vector<int>& partial, int k, int from) {
    if (static_cast<int>(partial.size()) == k) return true;
    for (int v = from; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : partial)
            if (!g.has_edge(u, v)) { ok = false; break; }
        if (!ok) continue;
        partial.push_back(v);
        if (extend_clique(g, partial, k, v + 1)) return true;
        partial.pop_back();
    }
    return false;
}

} // namespace

std::vector<int> first_clique(const Graph& g, int k) {
    if (k <= 0) return {};
    std::vector<int> partial;
    if (extend_clique(g, partial, k, 0)) return partial;
    return {};
}

std::string write_graph_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
    return out.str();
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n >> m) {
                require(n >= 0 && m >= 0, "StructuralError", "bad graph header");
            } else {
                std::string tok;
                std::istringstream probe(line);
                require(!(probe >> tok), "StructuralError", "bad graph header");
            }
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) {
            std::string tok;
            std::istringstream probe(line);
            require(!(probe >> tok), "StructuralError", "bad edge line");
            continue;
        }
        require(0 <= u && u < v && v < n, "StructuralError", "edge endpoints must satisfy 0 <= u < v < n");
        edges.push_back({u, v});
    }
    require(n >= 0, "StructuralError", "missing graph header");
    require(static_cast<long long>(edges.size()) == m, "StructuralError",
            "edge count does not match header");
    return Graph(n, std::move(edges));
}

} // namespace rlab
