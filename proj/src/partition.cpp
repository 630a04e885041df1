#include "rlab/partition.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "rlab/properties.hpp"

namespace rlab {

using json = nlohmann::json;

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

} // namespace

int RigidPartition::part_of(int v) const {
    for (size_t i = 0; i < parts.size(); ++i)
        if (std::binary_search(parts[i].begin(), parts[i].end(), v)) return static_cast<int>(i);
    return -1;
}

std::vector<Edge> RigidPartition::all_coloured_edges() const {
    std::vector<Edge> out;
    for (const auto& [key, edges] : edge_colours)
        out.insert(out.end(), edges.begin(), edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Structural validation shared by the verifier and the bound check.
void check_structure(const Graph& g, const RigidPartition& rp) {
    require(rp.d >= 1, "StructuralError", "dimension must be at least 1");
    require(static_cast<int>(rp.parts.size()) == rp.d + 1, "StructuralError",
            "expected d+1 parts");
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < rp.parts.size(); ++i) {
        for (int v : rp.parts[i]) {
            require(v >= 0 && v < g.vertex_count(), "StructuralError",
                    "part vertex out of range");
            require(owner[v] < 0, "StructuralError", "parts are not disjoint");
            owner[v] = static_cast<int>(i);
        }
        require(std::is_sorted(rp.parts[i].begin(), rp.parts[i].end()), "StructuralError",
                "parts must be sorted");
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        require(owner[v] >= 0, "StructuralError", "parts do not cover the vertex set");

    std::unordered_set<long long> seen;
    for (const auto& [key, edges] : rp.edge_colours) {
        auto [i, j] = key;
        require(0 <= i && i < j && j <= rp.d, "StructuralError", "bad colour key");
        for (const Edge& e : edges) {
            require(g.has_edge(e.first, e.second), "StructuralError",
                    "coloured edge not in the graph");
            int pu = owner[e.first], pv = owner[e.second];
            require((pu == i || pu == j) && (pv == i || pv == j), "StructuralError",
                    "coloured edge leaves its two parts");
            long long code = static_cast<long long>(e.first) * g.vertex_count() + e.second;
            require(seen.insert(code).second, "StructuralError",
                    "edge appears in two colour classes");
        }
    }
}

struct TmpNode {
    std::vector<int> members;
    int colour = -1;
    std::unique_ptr<TmpNode> left, right;
};

// Within-part coloured edge, endpoints in part-local indices.
struct LocalEdge {
    int u, v, colour;
};

struct PartSearch {
    const std::vector<int>& verts;          // part members (global ids, sorted)
    std::vector<LocalEdge> edges;           // coloured edges inside the part
    std::vector<std::vector<int>> incident; // local vertex -> edge indices
    int d;
    int part;
    std::unordered_set<std::string> failed; // memoized failed subsets

    std::string key_of(const std::vector<int>& local) const {
        std::string k((verts.size() + 7) / 8, '\0');
        for (int x : local) k[x >> 3] |= static_cast<char>(1 << (x & 7));
        return k;
    }

    std::unique_ptr<TmpNode> leaf(int local) const {
        auto n = std::make_unique<TmpNode>();
        n->members = {verts[local]};
        return n;
    }

    std::unique_ptr<TmpNode> solve(const std::vector<int>& local) {
        if (local.size() == 1) return leaf(local[0]);
        std::string key = key_of(local);
        if (failed.count(key)) return nullptr;

        std::vector<char> in(verts.size(), 0);
        for (int x : local) in[x] = 1;

        for (int j = 0; j <= d; ++j) {
            if (j == part) continue;
            // components of (U, coloured edges inside U of colour != j)
            std::vector<int> comp(verts.size(), -1);
            int ncomp = 0;
            std::vector<int> stack;
            for (int s : local) {
                if (comp[s] >= 0) continue;
                comp[s] = ncomp;
                stack.push_back(s);
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (int ei : incident[x]) {
                        const LocalEdge& e = edges[ei];
                        if (e.colour == j) continue;
                        int y = e.u == x ? e.v : e.u;
                        if (!in[y] || comp[y] >= 0) continue;
                        comp[y] = ncomp;
                        stack.push_back(y);
                    }
                }
                ++ncomp;
            }
            if (ncomp < 2) continue;

            std::vector<std::vector<int>> groups(ncomp);
            for (int x : local) groups[comp[x]].push_back(x);

            std::vector<std::unique_ptr<TmpNode>> sub;
            bool ok = true;
            for (auto& grp : groups) {
                auto t = solve(grp);
                if (!t) { ok = false; break; }
                sub.push_back(std::move(t));
            }
            if (!ok) continue;

            // Chain the components into binary cuts, all with colour j.
            auto acc = std::move(sub.back());
            for (int t = ncomp - 2; t >= 0; --t) {
                auto node = std::make_unique<TmpNode>();
                node->colour = j;
                node->members.reserve(sub[t]->members.size() + acc->members.size());
                std::merge(sub[t]->members.begin(), sub[t]->members.end(),
                           acc->members.begin(), acc->members.end(),
                           std::back_inserter(node->members));
                node->left = std::move(sub[t]);
                node->right = std::move(acc);
                acc = std::move(node);
            }
            return acc;
        }
        failed.insert(key);
        return nullptr;
    }
};

int flatten(const TmpNode& t, CutTree& out) {
    CutTree::Node n;
    n.members = t.members;
    n.colour = t.colour;
    int id = static_cast<int>(out.nodes.size());
    out.nodes.push_back(std::move(n));
    if (t.left) {
        int l = flatten(*t.left, out);
        int r = flatten(*t.right, out);
        out.nodes[id].left = l;
        out.nodes[id].right = r;
    }
    return id;
}

std::vector<LocalEdge> collect_part_edges(const RigidPartition& rp, int part,
                                          const std::vector<int>& verts) {
    std::vector<LocalEdge> out;
    auto pos = [&](int v) {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        return (it != verts.end() && *it == v) ? static_cast<int>(it - verts.begin()) : -1;
    };
    for (const auto& [key, edges] : rp.edge_colours) {
        auto [i, j] = key;
        if (i != part && j != part) continue;
        int other = (i == part) ? j : i;
        for (const Edge& e : edges) {
            int lu = pos(e.first), lv = pos(e.second);
            if (lu >= 0 && lv >= 0) out.push_back({lu, lv, other});
        }
    }
    return out;
}

} // namespace

std::optional<CutTree> find_cut_hierarchy(const Graph& g, const RigidPartition& rp, int part) {
    (void)g;
    const std::vector<int>& verts = rp.parts[part];
    CutTree tree;
    if (verts.size() < 2) {
        if (verts.size() == 1) {
            tree.nodes.push_back({{verts[0]}, -1, -1, -1});
            tree.root = 0;
        }
        return tree;
    }
    PartSearch search{verts, collect_part_edges(rp, part, verts), {}, rp.d, part, {}};
    search.incident.assign(verts.size(), {});
    for (size_t ei = 0; ei < search.edges.size(); ++ei) {
        search.incident[search.edges[ei].u].push_back(static_cast<int>(ei));
        search.incident[search.edges[ei].v].push_back(static_cast<int>(ei));
    }
    std::vector<int> all(verts.size());
    std::iota(all.begin(), all.end(), 0);
    auto t = search.solve(all);
    if (!t) return std::nullopt;
    tree.nodes.clear();
    tree.root = flatten(*t, tree);
    return tree;
}

bool hierarchy_is_valid(const Graph& g, const RigidPartition& rp, const CutHierarchy& h,
                        std::string* why) {
    (void)g;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (h.per_part.size() != rp.parts.size()) return fail("hierarchy part count mismatch");
    std::vector<Edge> hat = rp.all_coloured_edges();
    for (size_t i = 0; i < rp.parts.size(); ++i) {
        const CutTree& tree = h.per_part[i];
        if (rp.parts[i].size() < 2) continue;
        if (tree.root < 0 || tree.root >= static_cast<int>(tree.nodes.size()))
            return fail("missing hierarchy for a part with 2+ vertices");
        if (tree.nodes[tree.root].members != rp.parts[i])
            return fail("hierarchy root does not cover its part");
        for (int id = 0; id < static_cast<int>(tree.nodes.size()); ++id) {
            const auto& node = tree.nodes[id];
            if (node.left < 0) {
                if (node.members.size() != 1) return fail("leaf is not a singleton");
                continue;
            }
            if (node.colour < 0 || node.colour > rp.d || node.colour == static_cast<int>(i))
                return fail("bad colour at an internal node");
            const auto& L = tree.nodes[node.left].members;
            const auto& R = tree.nodes[node.right].members;
            std::vector<int> merged;
            std::merge(L.begin(), L.end(), R.begin(), R.end(), std::back_inserter(merged));
            if (merged != node.members || std::adjacent_find(merged.begin(), merged.end()) != merged.end())
                return fail("children do not partition an internal node");
            auto key = std::make_pair(std::min<int>(i, node.colour), std::max<int>(i, node.colour));
            auto it = rp.edge_colours.find(key);
            for (const Edge& e : hat) {
                bool ul = std::binary_search(L.begin(), L.end(), e.first);
                bool vl = std::binary_search(L.begin(), L.end(), e.second);
                bool ur = std::binary_search(R.begin(), R.end(), e.first);
                bool vr = std::binary_search(R.begin(), R.end(), e.second);
                bool crosses = (ul && vr) || (ur && vl);
                if (!crosses) continue;
                bool in_colour = it != rp.edge_colours.end() &&
                                 std::binary_search(it->second.begin(), it->second.end(), e);
                if (!in_colour) return fail("crossing edge outside the declared colour");
            }
        }
    }
    return true;
}

VerifyResult verify_rigid_partition(const Graph& g, const RigidPartition& rp,
                                    int exact_threshold) {
    check_structure(g, rp);
    VerifyResult res;

    int empty_parts = 0;
    for (const auto& p : rp.parts)
        if (p.empty()) ++empty_parts;
    if (empty_parts > 1) {
        res.reason = "more than one empty part";
        return res;
    }

    for (int i = 0; i <= rp.d; ++i) {
        for (int j = i + 1; j <= rp.d; ++j) {
            std::vector<int> verts;
            std::merge(rp.parts[i].begin(), rp.parts[i].end(), rp.parts[j].begin(),
                       rp.parts[j].end(), std::back_inserter(verts));
            auto it = rp.edge_colours.find({i, j});
            std::vector<Edge> edges = it == rp.edge_colours.end() ? std::vector<Edge>{} : it->second;
            std::vector<int> local(g.vertex_count(), -1);
            for (size_t t = 0; t < verts.size(); ++t) local[verts[t]] = static_cast<int>(t);
            std::vector<Edge> les;
            for (const Edge& e : edges) les.push_back(make_edge(local[e.first], local[e.second]));
            Graph gij(static_cast<int>(verts.size()), std::move(les));
            if (!is_connected(gij)) {
                std::ostringstream why;
                why << "G_" << (i + 1) << (j + 1) << " is disconnected";
                res.reason = why.str();
                return res;
            }
        }
    }

    res.hierarchy.per_part.resize(rp.d + 1);
    for (int i = 0; i <= rp.d; ++i) {
        auto tree = find_cut_hierarchy(g, rp, i);
        bool search_ok = tree.has_value();
        bool oracle_checked = exact_threshold > 0 &&
                              static_cast<int>(rp.parts[i].size()) <= exact_threshold &&
                              static_cast<int>(rp.parts[i].size()) <= 12;
        if (!search_ok) {
            std::ostringstream why;
            why << "no cut hierarchy for part " << (i + 1);
            res.reason = why.str();
            return res;
        }
        if (oracle_checked && !brute_force_cut_oracle(g, rp, i))
            res.hierarchy_only_parts.push_back(i);
        res.hierarchy.per_part[i] = std::move(*tree);
    }

    std::string why;
    require(hierarchy_is_valid(g, rp, res.hierarchy, &why), "StructuralError",
            "search produced an invalid hierarchy: " + why);
    res.accepted = true;
    return res;
}

bool brute_force_cut_oracle(const Graph& g, const RigidPartition& rp, int part) {
    (void)g;
    const std::vector<int>& verts = rp.parts[part];
    int k = static_cast<int>(verts.size());
    require(k <= 12, "TooLarge", "subset oracle capped at parts of size 12");
    if (k < 2) return true;
    std::vector<LocalEdge> edges = collect_part_edges(rp, part, verts);

    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<int> inside;
        for (size_t ei = 0; ei < edges.size(); ++ei) {
            if ((mask >> edges[ei].u & 1) && (mask >> edges[ei].v & 1))
                inside.push_back(static_cast<int>(ei));
        }
        if (inside.empty()) continue;
        uint32_t low = mask & (~mask + 1);
        bool found = false;
        for (uint32_t sub = (mask - 1) & mask; sub > 0 && !found; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue; // canonical halves only
            int colour = -2;
            bool mono = true;
            for (int ei : inside) {
                bool u_in = sub >> edges[ei].u & 1;
                bool v_in = sub >> edges[ei].v & 1;
                if (u_in == v_in) continue;
                if (colour == -2) colour = edges[ei].colour;
                else if (colour != edges[ei].colour) { mono = false; break; }
            }
            if (mono) found = true;
        }
        if (!found) return false;
    }
    return true;
}

bool Tournament::beats(int u, int v) const {
    auto it = winner.find(std::minmax(u, v));
    return it != winner.end() && it->second == u;
}

std::vector<int> Tournament::out_degrees() const {
    std::vector<int> deg(size, 0);
    for (const auto& [key, w] : winner) ++deg[w];
    return deg;
}

Tournament landau_tournament(const std::vector<int>& scores) {
    int k = static_cast<int>(scores.size());
    require(k >= 1, "InfeasibleScores", "empty score sequence");
    long long total = 0;
    for (int i = 0; i < k; ++i) {
        require(scores[i] >= 0, "InfeasibleScores", "negative score");
        require(i == 0 || scores[i] >= scores[i - 1], "InfeasibleScores",
                "scores must be nondecreasing");
        total += scores[i];
        require(total >= choose2(i + 1), "InfeasibleScores",
                "partial sums must dominate C(k,2)");
    }
    require(total == choose2(k), "InfeasibleScores", "scores must sum to C(k,2)");

    // Feasible out-degree sequences are exactly the feasible flows of the
    // bipartite network vertices -> pairs; find one by augmenting paths.
    int pairs = static_cast<int>(choose2(k));
    int S = k + pairs, T = S + 1, N = T + 1;
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    std::vector<std::pair<int, int>> pair_of(pairs);
    {
        int id = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j, ++id) {
                pair_of[id] = {i, j};
                cap[i][k + id] = 1;
                cap[j][k + id] = 1;
                cap[k + id][T] = 1;
            }
    }
    for (int i = 0; i < k; ++i) cap[S][i] = scores[i];

    auto bfs_augment = [&]() {
        std::vector<int> prev(N, -1);
        std::vector<int> queue = {S};
        prev[S] = S;
        for (size_t h = 0; h < queue.size(); ++h) {
            int x = queue[h];
            for (int y = 0; y < N; ++y) {
                if (prev[y] < 0 && cap[x][y] > 0) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (prev[T] < 0) return false;
        for (int y = T; y != S; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        return true;
    };
    int flow = 0;
    while (bfs_augment()) ++flow;
    require(flow == pairs, "InfeasibleScores", "score sequence is not realizable");

    Tournament t;
    t.size = k;
    for (int id = 0; id < pairs; ++id) {
        auto [i, j] = pair_of[id];
        // residual capacity tells which side pushed the unit
        t.winner[{i, j}] = (cap[k + id][i] > 0) ? i : j;
    }
    return t;
}

namespace {

std::vector<Edge> cross_edges(const Graph& g, const std::vector<int>& a,
                              const std::vector<int>& b) {
    std::vector<char> in_a(g.vertex_count(), 0), in_b(g.vertex_count(), 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if ((in_a[e.first] && in_b[e.second]) || (in_b[e.first] && in_a[e.second]))
            out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> inside_edges(const Graph& g, const std::vector<int>& a) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : a) in[v] = 1;
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (in[e.first] && in[e.second]) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

bool parts_partition_vertices(const Graph& g, const std::vector<std::vector<int>>& parts,
                              bool allow_empty) {
    std::vector<char> seen(g.vertex_count(), 0);
    int covered = 0;
    for (const auto& p : parts) {
        if (p.empty() && !allow_empty) return false;
        for (int v : p) {
            if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
            seen[v] = 1;
            ++covered;
        }
    }
    return covered == g.vertex_count();
}

bool edges_form_forest(const std::vector<Edge>& edges, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : edges) {
        int a = find(e.first), b = find(e.second);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

} // namespace

bool verify_strong(const Graph& g, const StrongPartition& sp) {
    if (sp.d < 1) return false;
    const int want = sp.kind == StrongKind::TypeI ? sp.d : sp.d + 1;
    if (static_cast<int>(sp.parts.size()) != want) return false;
    if (!parts_partition_vertices(g, sp.parts, false)) return false;

    auto connected_pair = [&](const std::vector<int>& a, const std::vector<int>& b) {
        InducedSubgraph sub = induced_pair(g, VertexSubset(a), VertexSubset(b));
        return is_connected(sub.graph);
    };

    if (sp.kind == StrongKind::TypeI) {
        for (int i = 0; i < sp.d; ++i)
            for (int j = i; j < sp.d; ++j)
                if (!connected_pair(sp.parts[i], sp.parts[j])) return false;
        return true;
    }
    if (sp.kind == StrongKind::TypeII) {
        for (int i = 0; i <= sp.d; ++i)
            for (int j = i + 1; j <= sp.d; ++j)
                if (!connected_pair(sp.parts[i], sp.parts[j])) return false;
        return true;
    }

    // Bipartite
    const int k = sp.d + 1;
    std::vector<char> in_a(g.vertex_count(), 0);
    for (int v : sp.side_a.members()) in_a[v] = 1;
    for (const Edge& e : g.edges())
        if (in_a[e.first] == in_a[e.second]) return false; // host not bipartite over side_a

    std::vector<std::vector<int>> A(k), B(k);
    for (int i = 0; i < k; ++i)
        for (int v : sp.parts[i])
            (in_a[v] ? A[i] : B[i]).push_back(v);

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && !connected_pair(A[i], B[j])) return false;

    bool have_forests = !sp.forests.empty() || !sp.scores.empty();
    if (have_forests) {
        if (static_cast<int>(sp.forests.size()) != k ||
            static_cast<int>(sp.scores.size()) != k)
            return false;
        long long prefix = 0;
        for (int i = 0; i < k; ++i) {
            if (sp.scores[i] < 0) return false;
            if (i > 0 && sp.scores[i] < sp.scores[i - 1]) return false;
            prefix += sp.scores[i];
            if (prefix < choose2(i + 1)) return false;
            if (static_cast<int>(sp.forests[i].size()) != sp.scores[i]) return false;
            std::vector<char> ia(g.vertex_count(), 0), ib(g.vertex_count(), 0);
            for (int v : A[i]) ia[v] = 1;
            for (int v : B[i]) ib[v] = 1;
            for (const Edge& e : sp.forests[i]) {
                if (!g.has_edge(e.first, e.second)) return false;
                bool ok = (ia[e.first] && ib[e.second]) || (ib[e.first] && ia[e.second]);
                if (!ok) return false;
            }
            if (!edges_form_forest(sp.forests[i], g.vertex_count())) return false;
        }
        return true;
    }

    // matching route: a matching of size d in every G[A_i,B_i] suffices
    for (int i = 0; i < k; ++i) {
        auto m = max_matching_pair(g, VertexSubset(A[i]), VertexSubset(B[i]));
        if (static_cast<int>(m.size()) < sp.d) return false;
    }
    return true;
}

namespace {

// Reduce scores to total C(k,2) while keeping them nondecreasing with partial
// sums dominating C(j,2); later positions are decremented first.
std::vector<int> trim_scores(std::vector<int> s) {
    int k = static_cast<int>(s.size());
    long long excess = std::accumulate(s.begin(), s.end(), 0LL) - choose2(k);
    require(excess >= 0, "InvalidSource", "scores below the required total");
    while (excess > 0) {
        bool done = false;
        for (int j = k - 1; j >= 0 && !done; --j) {
            if (s[j] == 0) continue;
            if (j > 0 && s[j] <= s[j - 1]) continue; // keep nondecreasing
            long long prefix = 0;
            bool ok = true;
            for (int t = 0; t < k; ++t) {
                prefix += s[t] - (t == j ? 1 : 0);
                if (prefix < choose2(t + 1)) { ok = false; break; }
            }
            if (!ok) continue;
            --s[j];
            --excess;
            done = true;
        }
        require(done, "InvalidSource", "cannot normalize scores to the exact total");
    }
    return s;
}

} // namespace

RigidPartition convert_to_rigid_partition(const Graph& g, const StrongPartition& sp) {
    require(verify_strong(g, sp), "InvalidSource", "source partition failed verification");
    RigidPartition rp;
    rp.d = sp.d;

    if (sp.kind == StrongKind::TypeI) {
        rp.parts = sp.parts;
        rp.parts.emplace_back(); // V_{d+1} stays empty
        for (int i = 0; i < sp.d; ++i) {
            for (int j = i + 1; j < sp.d; ++j)
                rp.edge_colours[{i, j}] = cross_edges(g, sp.parts[i], sp.parts[j]);
            rp.edge_colours[{i, sp.d}] = inside_edges(g, sp.parts[i]);
        }
        return rp;
    }

    if (sp.kind == StrongKind::TypeII) {
        rp.parts = sp.parts;
        for (int i = 0; i <= sp.d; ++i)
            for (int j = i + 1; j <= sp.d; ++j)
                rp.edge_colours[{i, j}] = cross_edges(g, sp.parts[i], sp.parts[j]);
        return rp;
    }

    // Bipartite: named forest edges complete the cross pieces, one per pair,
    // indexed through a tournament realizing the (trimmed) scores.
    const int k = sp.d + 1;
    std::vector<std::vector<int>> A(k), B(k);
    {
        std::vector<char> in_a(g.vertex_count(), 0);
        for (int v : sp.side_a.members()) in_a[v] = 1;
        for (int i = 0; i < k; ++i)
            for (int v : sp.parts[i])
                (in_a[v] ? A[i] : B[i]).push_back(v);
    }

    std::vector<std::vector<Edge>> forests = sp.forests;
    std::vector<int> scores = sp.scores;
    if (forests.empty()) { // matching route: d edges per part
        forests.resize(k);
        scores.assign(k, sp.d);
        for (int i = 0; i < k; ++i) {
            auto m = max_matching_pair(g, VertexSubset(A[i]), VertexSubset(B[i]));
            require(static_cast<int>(m.size()) >= sp.d, "InvalidSource",
                    "matching too small for the bipartite construction");
            m.resize(sp.d);
            forests[i] = m;
        }
    }
    std::vector<int> trimmed = trim_scores(scores);
    for (int i = 0; i < k; ++i) forests[i].resize(trimmed[i]);

    Tournament t = landau_tournament(trimmed);
    // e_i^j: the forest edges of part i named after its out-neighbours (ascending)
    std::map<std::pair<int, int>, Edge> named; // (i,j) i-winner -> edge of F_i
    for (int i = 0; i < k; ++i) {
        std::vector<int> outs;
        for (int j = 0; j < k; ++j)
            if (j != i && t.beats(i, j)) outs.push_back(j);
        require(static_cast<int>(outs.size()) == trimmed[i], "InvalidSource",
                "tournament out-degree mismatch");
        for (size_t idx = 0; idx < outs.size(); ++idx)
            named[{i, outs[idx]}] = forests[i][idx];
    }

    rp.parts = sp.parts;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            std::vector<Edge> edges = cross_edges(g, sp.parts[i], sp.parts[j]);
            Edge named_edge = t.beats(i, j) ? named[{i, j}] : named[{j, i}];
            edges.push_back(named_edge);
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            rp.edge_colours[{i, j}] = std::move(edges);
        }
    }
    return rp;
}

RigidPartition convert_to_rigid_partition(const Graph& g, const CdsFamily& family) {
    require(family.d >= 1, "InvalidSource", "dimension must be at least 1");
    const int d = family.d;
    const long long need = choose2(d + 1);
    require(static_cast<long long>(family.sets.size()) == need, "InvalidSource",
            "expected C(d+1,2) connected dominating sets");
    require(parts_partition_vertices(g, family.sets, false), "InvalidSource",
            "sets must partition the vertex set");
    for (const auto& s : family.sets)
        require(is_cds(g, VertexSubset(s)), "InvalidSource",
                "a member set is not a connected dominating set");

    // Pair (i,j), i<j gets the set A_ij; pairs are enumerated lexicographically.
    std::map<std::pair<int, int>, std::vector<int>> assigned;
    {
        int idx = 0;
        for (int i = 0; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) assigned[{i, j}] = family.sets[idx++];
    }

    RigidPartition rp;
    rp.d = d;
    rp.parts.assign(d + 1, {});
    if (d == 1) {
        rp.parts[0] = assigned[{0, 1}];
        std::sort(rp.parts[0].begin(), rp.parts[0].end());
        rp.edge_colours[{0, 1}] = inside_edges(g, rp.parts[0]);
        return rp;
    }
    // home part of each A_ij: V_1 = A_13, V_2 = A_12, V_3 = A_23, V_j = ∪_{i<j} A_ij
    std::map<std::pair<int, int>, int> home;
    home[{0, 2}] = 0;
    home[{0, 1}] = 1;
    home[{1, 2}] = 2;
    for (int j = 3; j <= d; ++j)
        for (int i = 0; i < j; ++i) home[{i, j}] = j;
    for (const auto& [pair, verts] : assigned) {
        auto& part = rp.parts[home[pair]];
        part.insert(part.end(), verts.begin(), verts.end());
    }
    for (auto& part : rp.parts) std::sort(part.begin(), part.end());

    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            std::vector<Edge> edges = cross_edges(g, rp.parts[i], rp.parts[j]);
            std::vector<Edge> dom = inside_edges(g, assigned[{i, j}]);
            edges.insert(edges.end(), dom.begin(), dom.end());
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            rp.edge_colours[{i, j}] = std::move(edges);
        }
    }
    return rp;
}

bool singleton_clique_check(const Graph& g, const RigidPartition& rp) {
    std::vector<int> singles;
    for (const auto& p : rp.parts)
        if (p.size() == 1) singles.push_back(p[0]);
    for (size_t i = 0; i < singles.size(); ++i)
        for (size_t j = i + 1; j < singles.size(); ++j)
            if (!g.has_edge(singles[i], singles[j])) return false;
    long long bound = 2LL * rp.d - g.vertex_count();
    return static_cast<long long>(singles.size()) >= bound;
}

// ---------------------------------------------------------------- JSON forms

std::string rigid_partition_to_json(const RigidPartition& rp) {
    json j;
    j["d"] = rp.d;
    j["parts"] = rp.parts;
    json colours = json::object();
    for (const auto& [key, edges] : rp.edge_colours) {
        std::ostringstream name;
        name << (key.first + 1) << ',' << (key.second + 1);
        json arr = json::array();
        for (const Edge& e : edges) arr.push_back({e.first, e.second});
        colours[name.str()] = std::move(arr);
    }
    j["edge_colours"] = std::move(colours);
    return j.dump();
}

RigidPartition rigid_partition_from_json(const std::string& text) {
    json j = json::parse(text);
    RigidPartition rp;
    rp.d = j.at("d").get<int>();
    rp.parts = j.at("parts").get<std::vector<std::vector<int>>>();
    for (auto& p : rp.parts) std::sort(p.begin(), p.end());
    for (const auto& [name, arr] : j.at("edge_colours").items()) {
        int i, jj;
        char comma;
        std::istringstream is(name);
        require(static_cast<bool>(is >> i >> comma >> jj) && comma == ',',
                "StructuralError", "bad colour key: " + name);
        std::vector<Edge> edges;
        for (const auto& e : arr)
            edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
        std::sort(edges.begin(), edges.end());
        rp.edge_colours[{i - 1, jj - 1}] = std::move(edges);
    }
    return rp;
}

namespace {

json tree_to_json(const CutTree& t, int id) {
    const auto& n = t.nodes[id];
    if (n.left < 0) return json(n.members[0]);
    return json::array({n.colour + 1, tree_to_json(t, n.left), tree_to_json(t, n.right)});
}

} // namespace

std::string hierarchy_to_json(const CutHierarchy& h) {
    json parts = json::array();
    for (const CutTree& t : h.per_part) {
        if (t.root < 0) parts.push_back(nullptr);
        else parts.push_back(tree_to_json(t, t.root));
    }
    json j;
    j["parts"] = std::move(parts);
    return j.dump();
}

std::string strong_partition_to_json(const StrongPartition& sp) {
    json j;
    switch (sp.kind) {
        case StrongKind::TypeI: j["kind"] = "type1"; break;
        case StrongKind::TypeII: j["kind"] = "type2"; break;
        case StrongKind::Bipartite: j["kind"] = "bipartite"; break;
    }
    j["d"] = sp.d;
    j["parts"] = sp.parts;
    if (sp.kind == StrongKind::Bipartite) {
        j["side_a"] = sp.side_a.members();
        if (!sp.forests.empty()) {
            json forests = json::array();
            for (const auto& f : sp.forests) {
                json arr = json::array();
                for (const Edge& e : f) arr.push_back({e.first, e.second});
                forests.push_back(std::move(arr));
            }
            j["forests"] = std::move(forests);
            j["scores"] = sp.scores;
        }
    }
    return j.dump();
}

StrongPartition strong_partition_from_json(const std::string& text) {
    json j = json::parse(text);
    StrongPartition sp;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "type1") sp.kind = StrongKind::TypeI;
    else if (kind == "type2") sp.kind = StrongKind::TypeII;
    else if (kind == "bipartite") sp.kind = StrongKind::Bipartite;
    else fail("StructuralError", "unknown strong partition kind: " + kind);
    sp.d = j.at("d").get<int>();
    sp.parts = j.at("parts").get<std::vector<std::vector<int>>>();
    for (auto& p : sp.parts) std::sort(p.begin(), p.end());
    if (sp.kind == StrongKind::Bipartite) {
        sp.side_a = VertexSubset(j.at("side_a").get<std::vector<int>>());
        if (j.contains("forests")) {
            for (const auto& f : j.at("forests")) {
                std::vector<Edge> edges;
                for (const auto& e : f)
                    edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
                sp.forests.push_back(std::move(edges));
            }
            sp.scores = j.at("scores").get<std::vector<int>>();
        }
    }
    return sp;
}

std::string cds_family_to_json(const CdsFamily& f) {
    json j;
    j["kind"] = "cds";
    j["d"] = f.d;
    j["sets"] = f.sets;
    return j.dump();
}

CdsFamily cds_family_from_json(const std::string& text) {
    json j = json::parse(text);
    require(j.at("kind").get<std::string>() == "cds", "StructuralError",
            "expected a cds source");
    CdsFamily f;
    f.d = j.at("d").get<int>();
    f.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    for (auto& s : f.sets) std::sort(s.begin(), s.end());
    return f;
}

} // namespace rlab
