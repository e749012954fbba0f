#ifndef METRIZED_TREE_WIENER_HPP
#define METRIZED_TREE_WIENER_HPP

#include <cstdint>
#include <vector>

#include "metrized/graph.hpp"
#include "metrized/identities.hpp"
#include "metrized/invariants.hpp"

namespace metrized {

struct NotATree : GraphError {
    using GraphError::GraphError;
};
struct NotUnitLengths : GraphError {
    using GraphError::GraphError;
};

namespace detail {

inline void require_tree(const MetrizedGraph& t) {
    if (!t.is_tree()) throw NotATree("graph is not a tree");
}
inline void require_unit(const MetrizedGraph& t) {
    if (!t.has_unit_lengths()) throw NotUnitLengths("tree must have unit edge lengths");
}

}  // namespace detail

/// Vertex counts of the two components of the tree minus one edge.
struct EdgeSplit {
    int edge_id;
    int m;  // component of the edge's u endpoint
    int k;  // component of the edge's v endpoint
};

inline std::vector<EdgeSplit> edge_splits(const MetrizedGraph& t) {
    detail::require_tree(t);
    std::vector<EdgeSplit> out;
    for (int e = 0; e < t.edge_count(); ++e) {
        auto comps = t.delete_edge_interior(e);
        const Edge& ed = t.edge(e);
        bool u_first = std::find(comps[0].begin(), comps[0].end(), ed.u) != comps[0].end();
        int a = static_cast<int>(comps[0].size());
        int b = static_cast<int>(comps[1].size());
        out.push_back({e, u_first ? a : b, u_first ? b : a});
    }
    return out;
}

/// W of a unit tree as the sum of m_i * k_i over edges.
inline long wiener_via_splits(const MetrizedGraph& t) {
    detail::require_unit(t);
    long total = 0;
    for (const EdgeSplit& s : edge_splits(t)) total += static_cast<long>(s.m) * s.k;
    return total;
}

/// Length-weighted splits sum; equals W for trees with arbitrary lengths.
inline Rat wiener_via_weighted_splits(const MetrizedGraph& t) {
    Rat total = 0;
    for (const EdgeSplit& s : edge_splits(t))
        total += t.edge(s.edge_id).len * s.m * s.k;
    return total;
}

/// Number of 3-edge subsets that all lie on one path: the minimal subtree
/// spanning the six endpoints must itself be a path. Brute force over triples.
inline long count_path_triples(const MetrizedGraph& t) {
    detail::require_tree(t);
    int v = t.vertex_count();
    int ne = t.edge_count();
    if (ne < 3) return 0;
    // parent/bfs order from vertex 0
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(v));
    for (const Edge& e : t.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> parent(static_cast<std::size_t>(v), -1);
    std::vector<int> depth(static_cast<std::size_t>(v), 0);
    std::vector<int> order{0};
    order.reserve(static_cast<std::size_t>(v));
    for (std::size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int w : adj[static_cast<std::size_t>(u)])
            if (w != parent[static_cast<std::size_t>(u)]) {
                parent[static_cast<std::size_t>(w)] = u;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                order.push_back(w);
            }
    }
    long count = 0;
    std::vector<int> deg(static_cast<std::size_t>(v));
    std::vector<std::pair<int, int>> sub_edges;
    for (int a = 0; a < ne; ++a)
        for (int b = a + 1; b < ne; ++b)
            for (int c = b + 1; c < ne; ++c) {
                // Steiner subtree = union of the paths from one endpoint to
                // the other five; the triple counts iff that subtree is a path.
                int pts[6] = {t.edge(a).u, t.edge(a).v, t.edge(b).u,
                              t.edge(b).v, t.edge(c).u, t.edge(c).v};
                sub_edges.clear();
                for (int i = 1; i < 6; ++i) {
                    int x = pts[0], yv = pts[i];
                    while (x != yv) {
                        if (depth[static_cast<std::size_t>(x)] < depth[static_cast<std::size_t>(yv)])
                            std::swap(x, yv);
                        int par = parent[static_cast<std::size_t>(x)];
                        sub_edges.push_back({std::min(x, par), std::max(x, par)});
                        x = par;
                    }
                }
                std::sort(sub_edges.begin(), sub_edges.end());
                sub_edges.erase(std::unique(sub_edges.begin(), sub_edges.end()),
                                sub_edges.end());
                std::fill(deg.begin(), deg.end(), 0);
                bool is_path = true;
                for (const auto& [x, yv] : sub_edges) {
                    if (++deg[static_cast<std::size_t>(x)] > 2 ||
                        ++deg[static_cast<std::size_t>(yv)] > 2) {
                        is_path = false;
                        break;
                    }
                }
                if (is_path) ++count;
            }
    return count;
}

/// W of a unit tree as (v-1)^2 plus the path-triple count.
inline long wiener_via_triples(const MetrizedGraph& t) {
    detail::require_unit(t);
    long vm1 = t.vertex_count() - 1;
    return vm1 * vm1 + count_path_triples(t);
}

/// Component sizes of the tree minus the edges at vertex p (p excluded).
struct BranchProfile {
    int vertex;
    std::vector<int> sizes;  // sum to v-1
};

inline BranchProfile branch_profile(const MetrizedGraph& t, int p) {
    detail::require_tree(t);
    t.check_vertex(p);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.vertex_count()));
    for (const Edge& e : t.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    BranchProfile out{p, {}};
    std::vector<char> seen(static_cast<std::size_t>(t.vertex_count()), 0);
    seen[static_cast<std::size_t>(p)] = 1;
    for (int root : adj[static_cast<std::size_t>(p)]) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        int size = 0;
        std::vector<int> stack{root};
        seen[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++size;
            for (int w : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        out.sizes.push_back(size);
    }
    return out;
}

/// Doyle-Graver form: v(v^2-1)/6 minus the branch triple products.
inline long wiener_doyle_graver(const MetrizedGraph& t) {
    detail::require_tree(t);
    detail::require_unit(t);
    long v = t.vertex_count();
    long total = v * (v * v - 1) / 6;
    for (int p = 0; p < t.vertex_count(); ++p) {
        if (t.valence(p) < 3) continue;
        const auto sizes = branch_profile(t, p).sizes;
        int n = static_cast<int>(sizes.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    total -= static_cast<long>(sizes[static_cast<std::size_t>(i)]) *
                             sizes[static_cast<std::size_t>(j)] *
                             sizes[static_cast<std::size_t>(k)];
    }
    return total;
}

enum class ValenceFormula { term2tree, tree1, tree2 };

/// Check a valence-weighted tree formula exactly; returns the report.
inline IdentityReport valence_formula_check(const MetrizedGraph& t, ValenceFormula which) {
    detail::require_tree(t);
    auto dist = distance_matrix(t);  // r = d on a tree
    int v = t.vertex_count();
    Rat len = t.total_length();
    if (which == ValenceFormula::term2tree) {
        for (int p = 0; p < v; ++p) {
            Rat rhs = 0;
            for (int q = 0; q < v; ++q)
                rhs += Rat(2 - t.valence(q)) * dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            if (rhs != len) {
                auto r = IdentityReport::equal("TERM2_TREE", len, std::move(rhs));
                r.note = "base vertex " + std::to_string(p);
                return r;
            }
        }
        return IdentityReport::equal("TERM2_TREE", len, len, "all base vertices");
    }
    Rat w = wiener_index(t);
    if (which == ValenceFormula::tree1) {
        Rat s = 0;
        for (int p = 0; p < v; ++p)
            for (int q = 0; q < v; ++q)
                s += Rat(t.valence(q)) * dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        return IdentityReport::equal("WIENER_TREE1", w, (Rat(v) * len + s) / 4);
    }
    Rat s = 0;
    for (int p = 0; p < v; ++p)
        for (int q = 0; q < v; ++q)
            s += Rat(t.valence(p)) * t.valence(q) *
                 dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    return IdentityReport::equal("WIENER_TREE2", w, Rat(2 * v - 1) / 4 * len + s / 8);
}

// Closed-form Wiener values of the beta family (unit lengths).

inline long beta1_wiener(long s, long t) { return (s + t + 1) * (s + t + 1) + s * t; }

inline long beta2_wiener(long s, long t) {
    return (s + t + 2) * (s + t + 2) + 2 * s * t + s + t;
}

inline long beta3_wiener(long s, long t, long k) {
    long b = s + t + k + 3;
    return b * b + 2 * (s * k + s * t + k * t + s + t + k);
}

inline long beta4_wiener(long s, long t, long k, long m) {
    long b = s + t + k + m + 3;
    return b * b + 2 * (s * k + s * t + k * t) + (m + 2) * (s + t + k);
}

inline long beta5_wiener(long s, long t, long k, long m, long n) {
    long vm1 = s + t + k + m + n + 4;
    return vm1 * vm1 + 2 * (s * k + s * t + k * t + m * n + k * n + s * n) +
           (n + 2) * (s + k) + (m + 2) * (s + k + t + 1) + n * (t + 5);
}

inline long beta6_wiener(long s, long t, long k, long m, long n, long h) {
    long vm1 = s + t + k + m + n + h + 5;
    return vm1 * vm1 + 2 * (s * k + s * t + k * t + m * n + k * n + s * n) +
           (n + 4) * (s + k) + n * (t + 6) + (m + 2) * (s + k + t + 2) +
           h * (3 * s + 3 * k + 2 * n + 2 * m + t + 6);
}

}  // namespace metrized

#endif
