#ifndef METRIZED_INVARIANTS_HPP
#define METRIZED_INVARIANTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "metrized/graph.hpp"
#include "metrized/resistance.hpp"

namespace metrized {

struct BaseVertexDisagreement : GraphError {
    using GraphError::GraphError;
};

/// Kirchhoff index: half-sum of pairwise effective resistances.
inline Rat kirchhoff_index(const MetrizedGraph& g) {
    return resistance_matrix(g).half_sum();
}

inline Rat kirchhoff_index(const ResistanceMatrix& R) { return R.half_sum(); }

/// All-pairs shortest-path distances (Dijkstra per source, exact lengths).
/// Parallel edges collapse to the per-pair minimum; self-loops are ignored.
inline std::vector<std::vector<Rat>> distance_matrix(const MetrizedGraph& g) {
    int v = g.vertex_count();
    std::vector<std::vector<std::pair<int, Rat>>> adj(static_cast<std::size_t>(v));
    for (const Edge& e : g.edges()) {
        if (e.is_self_loop()) continue;
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.len});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.len});
    }
    std::vector<std::vector<Rat>> dist(static_cast<std::size_t>(v));
    for (int s = 0; s < v; ++s) {
        std::vector<Rat> d(static_cast<std::size_t>(v));
        std::vector<bool> known(static_cast<std::size_t>(v), false);
        std::vector<bool> reached(static_cast<std::size_t>(v), false);
        reached[static_cast<std::size_t>(s)] = true;
        for (int step = 0; step < v; ++step) {
            int best = -1;
            for (int i = 0; i < v; ++i) {
                if (known[static_cast<std::size_t>(i)] || !reached[static_cast<std::size_t>(i)])
                    continue;
                if (best < 0 || d[static_cast<std::size_t>(i)] < d[static_cast<std::size_t>(best)])
                    best = i;
            }
            if (best < 0) break;
            known[static_cast<std::size_t>(best)] = true;
            for (const auto& [w, len] : adj[static_cast<std::size_t>(best)]) {
                Rat nd = d[static_cast<std::size_t>(best)] + len;
                if (!reached[static_cast<std::size_t>(w)] || nd < d[static_cast<std::size_t>(w)]) {
                    reached[static_cast<std::size_t>(w)] = true;
                    d[static_cast<std::size_t>(w)] = std::move(nd);
                }
            }
        }
        dist[static_cast<std::size_t>(s)] = std::move(d);
    }
    return dist;
}

/// Wiener index: half-sum of pairwise distances.
inline Rat wiener_index(const MetrizedGraph& g) {
    auto dist = distance_matrix(g);
    int v = g.vertex_count();
    Rat s = 0;
    for (int p = 0; p < v; ++p)
        for (int q = p + 1; q < v; ++q) s += dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    return s;
}

namespace detail {

// Per-edge terms of the x/y edge sums with base vertex p, with the bridge
// limits applied:
//   a = l*R^2/(l+R)^2        -> l for a bridge, 0 for a self-loop
//   b = l*(Ra-Rb)^2/(l+R)^2  -> l for a bridge, 0 for a self-loop
//   ee = l^2*R/(l+R)^2       -> 0 for a bridge and for a self-loop
struct XyTerms {
    Rat a, b, ee;
};

inline XyTerms xy_terms(const MetrizedGraph& g, int e, int p) {
    const Edge& ed = g.edge(e);
    if (ed.is_self_loop()) return {Rat(0), Rat(0), Rat(0)};
    EdgeReduction red = edge_reduction(g, e, p);
    if (red.bridge) return {ed.len, ed.len, Rat(0)};
    const Rat& ri = red.r_i.value;
    Rat denom = (ed.len + ri) * (ed.len + ri);
    Rat diff = red.r_a.value - red.r_b.value;
    return {ed.len * ri * ri / denom, ed.len * diff * diff / denom,
            ed.len * ed.len * ri / denom};
}

}  // namespace detail

/// The invariants x and y at an explicit base vertex.
inline std::pair<Rat, Rat> xy_invariants_at(const MetrizedGraph& g, int p) {
    g.check_vertex(p);
    Rat sa = 0, sb = 0, se = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto t = detail::xy_terms(g, e, p);
        sa += t.a;
        sb += t.b;
        se += t.ee;
    }
    Rat y = sa / 4 + sb * 3 / 4;
    Rat x = se + (sa - sb) * 3 / 4;
    return {std::move(x), std::move(y)};
}

/// x and y, computed at two base vertices and checked for agreement.
inline std::pair<Rat, Rat> xy_invariants(const MetrizedGraph& g) {
    auto first = xy_invariants_at(g, 0);
    if (g.vertex_count() >= 2) {
        auto second = xy_invariants_at(g, 1);
        if (first != second)
            throw BaseVertexDisagreement("x/y values depend on the base vertex");
    }
    return first;
}

/// r of the graph: sum over edges of l_i R_i/(l_i+R_i) = sum of r(p_i,q_i).
inline Rat r_gamma(const MetrizedGraph& g, const ResistanceMatrix& R) {
    Rat s = 0;
    for (const Edge& e : g.edges())
        if (!e.is_self_loop()) s += R.at(e.u, e.v);
    return s;
}

inline Rat r_gamma(const MetrizedGraph& g) { return r_gamma(g, resistance_matrix(g)); }

/// All scalar invariants of one graph.
struct IndexReport {
    int v = 0;
    int e = 0;
    Rat total_length;
    Rat kirchhoff;
    Rat wiener;
    Rat x;
    Rat y;
    Rat r_gamma;
};

inline IndexReport index_report(const MetrizedGraph& g) {
    IndexReport rep;
    rep.v = g.vertex_count();
    rep.e = g.edge_count();
    rep.total_length = g.total_length();
    ResistanceMatrix R = resistance_matrix(g);
    rep.kirchhoff = R.half_sum();
    rep.wiener = wiener_index(g);
    auto [x, y] = xy_invariants(g);
    rep.x = std::move(x);
    rep.y = std::move(y);
    rep.r_gamma = r_gamma(g, R);
    return rep;
}

}  // namespace metrized

#endif
