#ifndef METRIZED_IDENTITIES_HPP
#define METRIZED_IDENTITIES_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "metrized/graph.hpp"
#include "metrized/invariants.hpp"
#include "metrized/resistance.hpp"

namespace metrized {

struct DepthTooLarge : GraphError {
    using GraphError::GraphError;
};
struct PreconditionUnmet : GraphError {
    using GraphError::GraphError;
};
struct UnknownIdentity : GraphError {
    using GraphError::GraphError;
};

using GraphFunctional = std::function<Rat(const MetrizedGraph&)>;

/// Single-level contraction sum: sum over edges of coeff_i * f(contraction_i),
/// skipping self-loops (their coefficient is zero).
inline Rat contraction_sum(const MetrizedGraph& g, const GraphFunctional& f) {
    ResistanceMatrix R = resistance_matrix(g);
    Rat total = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (g.edge(i).is_self_loop()) continue;
        Rat c = contraction_coefficient(g, R, i);
        if (c == 0) continue;
        total += c * f(g.contract_edge(i).first);
    }
    return total;
}

namespace detail {

inline Rat successive_rec(const MetrizedGraph& g, const GraphFunctional& f, int depth) {
    if (depth == 0) return f(g);
    ResistanceMatrix R = resistance_matrix(g);
    Rat total = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (g.edge(i).is_self_loop()) continue;
        Rat c = contraction_coefficient(g, R, i);
        if (c == 0) continue;
        total += c * successive_rec(g.contract_edge(i).first, f, depth - 1);
    }
    return total;
}

// As above, but carries per-vertex multiplicities (how many original vertices
// were merged into each) down to the leaves.
using WeightedLeaf =
    std::function<Rat(const MetrizedGraph&, const std::vector<long>&)>;

inline Rat successive_weighted_rec(const MetrizedGraph& g, std::vector<long> weights,
                                   const WeightedLeaf& leaf, int depth) {
    if (depth == 0) return leaf(g, weights);
    ResistanceMatrix R = resistance_matrix(g);
    Rat total = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (g.edge(i).is_self_loop()) continue;
        Rat c = contraction_coefficient(g, R, i);
        if (c == 0) continue;
        auto [h, map] = g.contract_edge(i);
        std::vector<long> w(static_cast<std::size_t>(h.vertex_count()), 0);
        for (std::size_t old = 0; old < map.size(); ++old)
            w[static_cast<std::size_t>(map[old])] += weights[old];
        total += c * successive_weighted_rec(h, std::move(w), leaf, depth - 1);
    }
    return total;
}

inline mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace detail

/// k-fold nested contraction sum over admissible contractions.
inline Rat successive_sum(const MetrizedGraph& g, const GraphFunctional& f, int k) {
    if (k < 1 || k > g.vertex_count() - 2)
        throw DepthTooLarge("successive_sum depth must satisfy 1 <= k <= v-2");
    return detail::successive_rec(g, f, k);
}

/// One verified identity: both sides, pass flag, context.
struct IdentityReport {
    std::string id;
    Rat lhs;
    Rat rhs;
    bool pass = false;
    bool skipped = false;
    bool inequality = false;  // lhs/rhs are bounds, not two sides of an equation
    std::string note;

    static IdentityReport skip(std::string id, std::string reason) {
        IdentityReport r;
        r.id = std::move(id);
        r.skipped = true;
        r.note = std::move(reason);
        return r;
    }
    static IdentityReport equal(std::string id, Rat lhs, Rat rhs, std::string note = {}) {
        IdentityReport r;
        r.id = std::move(id);
        r.pass = lhs == rhs;
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.note = std::move(note);
        return r;
    }
    static IdentityReport between(std::string id, Rat lo, const Rat& mid, Rat hi) {
        IdentityReport r;
        r.id = std::move(id);
        r.pass = lo <= mid && mid <= hi;
        r.inequality = true;
        r.lhs = std::move(lo);
        r.rhs = std::move(hi);
        r.note = "value " + to_string(mid);
        return r;
    }
};

namespace detail {

// Sum over edges of l*(Ra-Rb)^2/(l+R)^2 at base p (bridge -> l).
inline Rat term2_sum(const MetrizedGraph& g, int p) {
    Rat s = 0;
    for (int e = 0; e < g.edge_count(); ++e) s += xy_terms(g, e, p).b;
    return s;
}

// Sum over edges of l*Ra*Rb/(l+R)^2 at base p (bridge -> 0); equals (A-B)/4.
inline Rat rab_sum(const MetrizedGraph& g, int p) {
    Rat a = 0, b = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto t = xy_terms(g, e, p);
        a += t.a;
        b += t.b;
    }
    return (a - b) / 4;
}

struct Contracted {
    int edge_id;
    Rat coeff;
    MetrizedGraph graph;
    VertexMap map;
    ResistanceMatrix rm;
};

inline std::vector<Contracted> all_contractions(const MetrizedGraph& g,
                                                const ResistanceMatrix& R) {
    std::vector<Contracted> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (g.edge(i).is_self_loop()) continue;
        auto [h, map] = g.contract_edge(i);
        ResistanceMatrix hr = resistance_matrix(h);
        out.push_back({i, contraction_coefficient(g, R, i), std::move(h),
                       std::move(map), std::move(hr)});
    }
    return out;
}

}  // namespace detail

/// Closed coefficient of y in the k-step successive contraction of Kf.
inline Rat main2_y_coefficient(int v, int k) {
    Rat num = (Rat(v) * v - Rat(k + 2) * v + (k - 1)) * k;
    return num / (Rat(v - k - 2) * (v - k - 3));
}

/// Left side of the coefficient identity: the telescoped per-step form.
inline Rat main2_y_coefficient_stepwise(int v, int k) {
    Rat total = Rat(v) / (v - 4);
    Rat prod = 1;
    for (int i = 1; i <= k - 1; ++i) {
        prod *= Rat(v - 1 - i) / (v - 3 - i);
        total += Rat(v - i) / (v - 4 - i) * prod;
    }
    return total;
}

inline const std::vector<std::string>& identity_catalog() {
    static const std::vector<std::string> ids = {
        "KC1",        "RES_SUM",  "TERM2",      "KF_TERM2",  "MAIN1",
        "PROP_KF",    "RES_CONTRACT", "R_CONTRACT", "XY_CONTRACT", "MAIN2",
        "MK_ORACLE",  "V23",      "BOUND_V4",   "BOUND_UP",  "BOUND_UPLOW",
        "LEM211",     "XYR",      "SUCC_XY",    "COR_Y"};
    return ids;
}

/// Evaluate one catalog identity on a graph, exactly. `k` is the contraction
/// depth for MAIN2/SUCC_XY; k < 0 means "every admissible depth".
inline IdentityReport verify_identity(const MetrizedGraph& g, const std::string& id,
                                      int k = -1) {
    const int v = g.vertex_count();
    ResistanceMatrix R = resistance_matrix(g);

    auto kf = [](const MetrizedGraph& h) { return kirchhoff_index(h); };

    if (id == "KC1") {
        Rat rhs = 0;
        for (const auto& c : detail::all_contractions(g, R)) {
            int merged = c.map[static_cast<std::size_t>(g.edge(c.edge_id).u)];
            rhs += c.coeff * (c.rm.half_sum() + c.rm.row_sum(merged));
        }
        return IdentityReport::equal(id, Rat(v - 2) * R.half_sum(), std::move(rhs));
    }

    if (id == "RES_SUM") {
        Rat rhs = 0;
        for (const auto& c : detail::all_contractions(g, R))
            rhs += 2 * c.coeff * c.rm.half_sum();
        rhs += 2 * v * detail::rab_sum(g, 0);
        for (int e = 0; e < g.edge_count(); ++e) rhs -= v * detail::xy_terms(g, e, 0).a;
        for (int p = 0; p < v; ++p)
            for (int e = 0; e < g.edge_count(); ++e) {
                const Edge& ed = g.edge(e);
                if (ed.is_self_loop()) continue;
                rhs += contraction_coefficient(g, R, e) * (R.at(ed.u, p) + R.at(ed.v, p));
            }
        return IdentityReport::equal(id, Rat(2) * (v - 2) * R.half_sum(), std::move(rhs));
    }

    if (id == "TERM2") {
        for (int p = 0; p < v; ++p) {
            Rat lhs = detail::term2_sum(g, p);
            Rat rhs1 = 0, rhs2 = 0;
            for (int e = 0; e < g.edge_count(); ++e) {
                const Edge& ed = g.edge(e);
                Rat c = contraction_coefficient(g, R, e);
                Rat ends = R.at(ed.u, p) + R.at(ed.v, p);
                rhs1 += (1 - c) * ends;
                rhs2 -= c * ends;
            }
            for (int q = 0; q < v; ++q) {
                rhs1 -= Rat(g.valence(q) - 2) * R.at(p, q);
                rhs2 += 2 * R.at(p, q);
            }
            if (lhs != rhs1 || lhs != rhs2) {
                auto r = IdentityReport::equal(id, std::move(lhs),
                                               lhs != rhs1 ? std::move(rhs1) : std::move(rhs2));
                r.note = "base vertex " + std::to_string(p);
                return r;
            }
        }
        return IdentityReport::equal(id, detail::term2_sum(g, 0), detail::term2_sum(g, 0),
                                     "all base vertices");
    }

    if (id == "KF_TERM2") {
        Rat rhs = Rat(v) * detail::term2_sum(g, 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.is_self_loop()) continue;
            Rat c = contraction_coefficient(g, R, e);
            for (int p = 0; p < v; ++p) rhs += c * (R.at(ed.u, p) + R.at(ed.v, p));
        }
        return IdentityReport::equal(id, Rat(4) * R.half_sum(), std::move(rhs));
    }

    if (id == "MAIN1") {
        if (v < 4) return IdentityReport::skip(id, "requires at least 4 vertices");
        Rat rhs = 0;
        for (const auto& c : detail::all_contractions(g, R)) rhs += c.coeff * c.rm.half_sum();
        rhs -= Rat(v) * xy_invariants(g).second;
        return IdentityReport::equal(id, Rat(v - 4) * R.half_sum(), std::move(rhs));
    }

    if (id == "PROP_KF") {
        Rat rhs = Rat(v) * xy_invariants(g).second;
        for (const auto& c : detail::all_contractions(g, R)) {
            int merged = c.map[static_cast<std::size_t>(g.edge(c.edge_id).u)];
            rhs += c.coeff * c.rm.row_sum(merged);
        }
        return IdentityReport::equal(id, Rat(2) * R.half_sum(), std::move(rhs));
    }

    if (id == "RES_CONTRACT") {
        auto contractions = detail::all_contractions(g, R);
        Rat lsum = 0, rsum = 0;
        for (int p = 0; p < v; ++p)
            for (int q = p + 1; q < v; ++q) {
                Rat lhs = Rat(v - 2) * R.at(p, q);
                Rat rhs = 0;
                for (const auto& c : contractions)
                    rhs += c.coeff * c.rm.at(c.map[static_cast<std::size_t>(p)],
                                             c.map[static_cast<std::size_t>(q)]);
                if (lhs != rhs) {
                    auto r = IdentityReport::equal(id, std::move(lhs), std::move(rhs));
                    r.note = "pair (" + std::to_string(p) + "," + std::to_string(q) + ")";
                    return r;
                }
                lsum += lhs;
                rsum += rhs;
            }
        return IdentityReport::equal(id, std::move(lsum), std::move(rsum), "all pairs");
    }

    if (id == "R_CONTRACT") {
        Rat rhs = 0;
        for (const auto& c : detail::all_contractions(g, R))
            rhs += c.coeff * r_gamma(c.graph, c.rm);
        return IdentityReport::equal(id, Rat(v - 2) * r_gamma(g, R), std::move(rhs));
    }

    if (id == "XY_CONTRACT") {
        auto [x, y] = xy_invariants(g);
        Rat rx = 0, ry = 0;
        for (const auto& c : detail::all_contractions(g, R)) {
            auto [cx, cy] = xy_invariants(c.graph);
            rx += c.coeff * cx;
            ry += c.coeff * cy;
        }
        Rat lx = Rat(v - 2) * x, ly = Rat(v - 2) * y;
        if (lx != rx) return IdentityReport::equal(id, std::move(lx), std::move(rx), "x side");
        auto r = IdentityReport::equal(id, std::move(ly), std::move(ry), "y side");
        return r;
    }

    if (id == "MAIN2") {
        if (v < 5) return IdentityReport::skip(id, "requires at least 5 vertices");
        int klo = (k < 0) ? 1 : k;
        int khi = (k < 0) ? v - 4 : k;
        if (klo < 1 || khi > v - 4)
            return IdentityReport::skip(id, "depth k must satisfy 1 <= k <= v-4");
        Rat kfv = R.half_sum();
        Rat y = xy_invariants(g).second;
        for (int kk = klo; kk <= khi; ++kk) {
            Rat rhs = Rat(detail::factorial(v - 4 - kk)) / Rat(detail::factorial(v - 4)) *
                          successive_sum(g, kf, kk) -
                      main2_y_coefficient(v, kk) * y;
            if (kfv != rhs) {
                auto r = IdentityReport::equal(id, kfv, std::move(rhs));
                r.note = "k=" + std::to_string(kk);
                return r;
            }
        }
        return IdentityReport::equal(id, kfv, kfv,
                                     "k=" + std::to_string(klo) + ".." + std::to_string(khi));
    }

    if (id == "MK_ORACLE") {
        if (v < 2) return IdentityReport::skip(id, "requires at least 2 vertices");
        if (v > 6) return IdentityReport::skip(id, "full recursion budget is v <= 6");
        detail::WeightedLeaf leaf = [](const MetrizedGraph& h,
                                       const std::vector<long>& w) -> Rat {
            Rat r = effective_resistance(h, 0, 1);
            return Rat(w[0]) * Rat(w[1]) * r;
        };
        Rat rhs = detail::successive_weighted_rec(
                      g, std::vector<long>(static_cast<std::size_t>(v), 1), leaf, v - 2) /
                  Rat(detail::factorial(v - 2));
        return IdentityReport::equal(id, R.half_sum(), std::move(rhs));
    }

    if (id == "V23") {
        if (v != 2 && v != 3) return IdentityReport::skip(id, "stated only for v = 2 or 3");
        Rat y = xy_invariants(g).second;
        return IdentityReport::equal(id, R.half_sum(), v == 2 ? y : Rat(2) * y,
                                     v == 2 ? "Kf = y" : "Kf = 2y");
    }

    if (id == "BOUND_V4") {
        if (v != 4) return IdentityReport::skip(id, "stated only for v = 4");
        Rat y = xy_invariants(g).second;
        return IdentityReport::between(id, Rat(3) * y, R.half_sum(), Rat(4) * y);
    }

    if (id == "BOUND_UP") {
        Rat y = xy_invariants(g).second;
        Rat kfv = R.half_sum();
        IdentityReport r;
        r.id = id;
        r.lhs = kfv;
        r.rhs = Rat(v) * v / 4 * y;
        r.pass = r.lhs <= r.rhs;
        r.inequality = true;
        return r;
    }

    if (id == "BOUND_UPLOW") {
        if (v < 4) return IdentityReport::skip(id, "requires at least 4 vertices");
        Rat y = xy_invariants(g).second;
        return IdentityReport::between(id, Rat(v - 1) * y, R.half_sum(),
                                       (Rat(v) * v - 3 * v + 4) / 2 * y);
    }

    if (id == "LEM211") {
        Rat b0 = detail::term2_sum(g, 0);
        Rat d0 = detail::rab_sum(g, 0);
        for (int p = 1; p < v; ++p) {
            Rat bp = detail::term2_sum(g, p);
            if (bp != b0) {
                auto r = IdentityReport::equal(id, b0, std::move(bp));
                r.note = "difference-square sum, base " + std::to_string(p);
                return r;
            }
            Rat dp = detail::rab_sum(g, p);
            if (dp != d0) {
                auto r = IdentityReport::equal(id, d0, std::move(dp));
                r.note = "RaRb sum, base " + std::to_string(p);
                return r;
            }
        }
        return IdentityReport::equal(id, b0, b0, "independent of base vertex");
    }

    if (id == "XYR") {
        auto [x, y] = xy_invariants(g);
        return IdentityReport::equal(id, x + y, r_gamma(g, R));
    }

    if (id == "SUCC_XY") {
        if (v < 3) return IdentityReport::skip(id, "requires at least 3 vertices");
        int klo = (k < 0) ? 1 : k;
        int khi = (k < 0) ? v - 2 : k;
        if (klo < 1 || khi > v - 2)
            return IdentityReport::skip(id, "depth k must satisfy 1 <= k <= v-2");
        auto [x, y] = xy_invariants(g);
        auto fx = [](const MetrizedGraph& h) { return xy_invariants(h).first; };
        auto fy = [](const MetrizedGraph& h) { return xy_invariants(h).second; };
        for (int kk = klo; kk <= khi; ++kk) {
            Rat scale = Rat(detail::factorial(v - 2)) / Rat(detail::factorial(v - 2 - kk));
            Rat sx = successive_sum(g, fx, kk);
            if (scale * x != sx) {
                auto r = IdentityReport::equal(id, scale * x, std::move(sx));
                r.note = "x side, k=" + std::to_string(kk);
                return r;
            }
            Rat sy = successive_sum(g, fy, kk);
            if (scale * y != sy) {
                auto r = IdentityReport::equal(id, scale * y, std::move(sy));
                r.note = "y side, k=" + std::to_string(kk);
                return r;
            }
        }
        return IdentityReport::equal(id, x + y, x + y,
                                     "k=" + std::to_string(klo) + ".." + std::to_string(khi));
    }

    if (id == "COR_Y") {
        if (v < 3) return IdentityReport::skip(id, "requires at least 3 vertices");
        if (v > 6) return IdentityReport::skip(id, "full recursion budget is v <= 6");
        Rat y = xy_invariants(g).second;
        detail::WeightedLeaf leaf = [](const MetrizedGraph& h,
                                       const std::vector<long>&) -> Rat {
            return effective_resistance(h, 0, 1);
        };
        Rat rhs = detail::successive_weighted_rec(
            g, std::vector<long>(static_cast<std::size_t>(v), 1), leaf, v - 2);
        return IdentityReport::equal(id, Rat(detail::factorial(v - 2)) * y, std::move(rhs));
    }

    throw UnknownIdentity("unknown identity id: " + id);
}

/// Run the whole catalog on one graph.
inline std::vector<IdentityReport> verify_all(const MetrizedGraph& g) {
    std::vector<IdentityReport> out;
    for (const std::string& id : identity_catalog()) out.push_back(verify_identity(g, id));
    return out;
}

}  // namespace metrized

#endif
