#ifndef METRIZED_RESISTANCE_HPP
#define METRIZED_RESISTANCE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "metrized/graph.hpp"
#include "metrized/rational.hpp"

namespace metrized {

/// Symmetric table of pairwise effective resistances; zero diagonal.
class ResistanceMatrix {
  public:
    explicit ResistanceMatrix(int v) : v_(v), data_(static_cast<std::size_t>(v) * v) {}

    int size() const { return v_; }
    const Rat& at(int p, int q) const {
        return data_[static_cast<std::size_t>(p) * v_ + q];
    }
    Rat& at(int p, int q) { return data_[static_cast<std::size_t>(p) * v_ + q]; }

    /// Half-sum over all ordered pairs = sum over unordered pairs.
    Rat half_sum() const {
        Rat s = 0;
        for (int p = 0; p < v_; ++p)
            for (int q = p + 1; q < v_; ++q) s += at(p, q);
        return s;
    }

    Rat row_sum(int p) const {
        Rat s = 0;
        for (int q = 0; q < v_; ++q) s += at(p, q);
        return s;
    }

  private:
    int v_;
    std::vector<Rat> data_;
};

namespace detail {

// Gauss-Jordan inverse of a dense rational matrix (in place, partial pivot).
// The grounded Laplacian is positive definite, so this cannot fail on valid
// input; a zero pivot means the graph was disconnected.
inline std::vector<Rat> invert(std::vector<Rat> a, int n) {
    std::vector<Rat> inv(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = 1;
    auto A = [&](int r, int c) -> Rat& { return a[static_cast<std::size_t>(r) * n + c]; };
    auto B = [&](int r, int c) -> Rat& { return inv[static_cast<std::size_t>(r) * n + c]; };
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (A(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw GraphError("singular grounded Laplacian");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                swap(A(pivot, c), A(col, c));
                swap(B(pivot, c), B(col, c));
            }
        Rat d = A(col, col);
        for (int c = 0; c < n; ++c) {
            A(col, c) /= d;
            B(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || A(r, col) == 0) continue;
            Rat f = A(r, col);
            for (int c = 0; c < n; ++c) {
                A(r, c) -= f * A(col, c);
                B(r, c) -= f * B(col, c);
            }
        }
    }
    return inv;
}

// Weighted Laplacian with conductance 1/len per edge; self-loops contribute
// nothing. Parallel edges merge into one conductance here only.
inline std::vector<Rat> laplacian(const MetrizedGraph& g) {
    int v = g.vertex_count();
    std::vector<Rat> L(static_cast<std::size_t>(v) * v);
    auto at = [&](int r, int c) -> Rat& { return L[static_cast<std::size_t>(r) * v + c]; };
    for (const Edge& e : g.edges()) {
        if (e.is_self_loop()) continue;
        Rat c = Rat(1) / e.len;
        at(e.u, e.u) += c;
        at(e.v, e.v) += c;
        at(e.u, e.v) -= c;
        at(e.v, e.u) -= c;
    }
    return L;
}

}  // namespace detail

/// All-pairs effective resistance via one grounded-Laplacian inverse.
inline ResistanceMatrix resistance_matrix(const MetrizedGraph& g) {
    int v = g.vertex_count();
    ResistanceMatrix R(v);
    if (v == 1) return R;
    int n = v - 1;  // ground the last vertex
    std::vector<Rat> L = detail::laplacian(g);
    std::vector<Rat> Lg(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            Lg[static_cast<std::size_t>(r) * n + c] = L[static_cast<std::size_t>(r) * v + c];
    std::vector<Rat> M = detail::invert(std::move(Lg), n);
    auto m = [&](int r, int c) -> const Rat& {
        return M[static_cast<std::size_t>(r) * n + c];
    };
    for (int p = 0; p < v; ++p)
        for (int q = p + 1; q < v; ++q) {
            Rat r;
            if (q == v - 1)
                r = m(p, p);
            else
                r = m(p, p) + m(q, q) - m(p, q) - m(q, p);
            R.at(p, q) = r;
            R.at(q, p) = std::move(r);
        }
    return R;
}

/// Effective resistance between two vertices (single grounded solve).
inline Rat effective_resistance(const MetrizedGraph& g, int p, int q) {
    g.check_vertex(p);
    g.check_vertex(q);
    if (p == q) return Rat(0);
    int v = g.vertex_count();
    std::vector<Rat> L = detail::laplacian(g);
    // Ground q: solve L' x = e_p over the remaining vertices; r = x[p].
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(v - 1));
    for (int i = 0; i < v; ++i)
        if (i != q) idx.push_back(i);
    int n = v - 1;
    std::vector<Rat> a(static_cast<std::size_t>(n) * (n + 1));
    auto A = [&](int r, int c) -> Rat& {
        return a[static_cast<std::size_t>(r) * (n + 1) + c];
    };
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            A(r, c) = L[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)]) * v +
                        idx[static_cast<std::size_t>(c)]];
        A(r, n) = (idx[static_cast<std::size_t>(r)] == p) ? 1 : 0;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (A(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw GraphError("singular grounded Laplacian");
        if (pivot != col)
            for (int c = col; c <= n; ++c) swap(A(pivot, c), A(col, c));
        for (int r = col + 1; r < n; ++r) {
            if (A(r, col) == 0) continue;
            Rat f = A(r, col) / A(col, col);
            for (int c = col; c <= n; ++c) A(r, c) -= f * A(col, c);
        }
    }
    std::vector<Rat> x(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        Rat s = A(r, n);
        for (int c = r + 1; c < n; ++c) s -= A(r, c) * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(r)] = s / A(r, r);
    }
    for (int r = 0; r < n; ++r)
        if (idx[static_cast<std::size_t>(r)] == p) return x[static_cast<std::size_t>(r)];
    throw BadVertex("vertex lookup failed");  // unreachable
}

/// Voltage j_z(x,y), from the three-resistance identity.
inline Rat voltage(const MetrizedGraph& g, int z, int x, int y) {
    g.check_vertex(z);
    g.check_vertex(x);
    g.check_vertex(y);
    ResistanceMatrix R = resistance_matrix(g);
    return (R.at(x, z) + R.at(y, z) - R.at(x, y)) / 2;
}

inline Rat voltage(const ResistanceMatrix& R, int z, int x, int y) {
    return (R.at(x, z) + R.at(y, z) - R.at(x, y)) / 2;
}

/// Nonnegative rational or +infinity; R_i of a bridge is the infinite case.
struct ExtResistance {
    bool infinite = false;
    Rat value;  // meaningful only when finite

    static ExtResistance inf() { return {true, Rat(0)}; }
    static ExtResistance finite(Rat v) { return {false, std::move(v)}; }
};

/// Two-terminal reduction of the graph with reference to edge e_i and base
/// vertex p. For a bridge the limit conventions apply: the base side gets
/// R_a (or R_b) = 0 and the far side goes to infinity.
struct EdgeReduction {
    int edge_id = -1;
    int base = -1;
    ExtResistance r_i;
    ExtResistance r_a;
    ExtResistance r_b;
    Rat r_c;
    bool bridge = false;
    bool self_loop = false;
    int side = -1;  // bridges only: the endpoint whose component contains p
};

inline EdgeReduction edge_reduction(const MetrizedGraph& g, int e, int p) {
    const Edge& ed = g.edge(e);
    g.check_vertex(p);
    EdgeReduction out;
    out.edge_id = e;
    out.base = p;
    if (ed.is_self_loop()) {
        // The reduction values are never defined for a self-loop in the
        // formulas; all its coefficient terms vanish. Report zeros plus the
        // resistance to the loop vertex.
        out.self_loop = true;
        out.r_i = ExtResistance::finite(Rat(0));
        out.r_a = ExtResistance::finite(Rat(0));
        out.r_b = ExtResistance::finite(Rat(0));
        out.r_c = effective_resistance(g, p, ed.u);
        return out;
    }
    auto comps = g.delete_edge_interior(e);
    if (comps.size() == 1) {
        // Voltages taken in the graph with the interior of e removed.
        std::vector<Edge> rest;
        for (int i = 0; i < g.edge_count(); ++i)
            if (i != e) rest.push_back(g.edge(i));
        MetrizedGraph minus(g.vertex_count(), std::move(rest));
        ResistanceMatrix R = resistance_matrix(minus);
        out.r_i = ExtResistance::finite(R.at(ed.u, ed.v));
        out.r_a = ExtResistance::finite(voltage(R, ed.u, p, ed.v));
        out.r_b = ExtResistance::finite(voltage(R, ed.v, p, ed.u));
        out.r_c = voltage(R, p, ed.u, ed.v);
        return out;
    }
    out.bridge = true;
    out.r_i = ExtResistance::inf();
    const std::vector<int>& first = comps[0];
    bool p_with_u =
        (std::find(first.begin(), first.end(), p) != first.end()) ==
        (std::find(first.begin(), first.end(), ed.u) != first.end());
    int anchor = p_with_u ? ed.u : ed.v;
    out.side = anchor;
    if (p_with_u) {
        out.r_a = ExtResistance::finite(Rat(0));
        out.r_b = ExtResistance::inf();
    } else {
        out.r_a = ExtResistance::inf();
        out.r_b = ExtResistance::finite(Rat(0));
    }
    const std::vector<int>& side =
        std::find(comps[0].begin(), comps[0].end(), p) != comps[0].end() ? comps[0]
                                                                         : comps[1];
    MetrizedGraph sub = g.induced(side);
    int sp = -1, sa = -1;
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (side[i] == p) sp = static_cast<int>(i);
        if (side[i] == anchor) sa = static_cast<int>(i);
    }
    out.r_c = effective_resistance(sub, sp, sa);
    return out;
}

/// Contraction coefficient R_i/(l_i+R_i): 1 for a bridge, 0 for a self-loop.
/// Equals r(p_i,q_i)/l_i with the resistance taken in the full graph, which
/// is how it is computed here (one matrix serves every edge).
inline Rat contraction_coefficient(const MetrizedGraph& g, const ResistanceMatrix& R,
                                   int e) {
    const Edge& ed = g.edge(e);
    if (ed.is_self_loop()) return Rat(0);
    return R.at(ed.u, ed.v) / ed.len;
}

inline std::vector<Rat> contraction_coefficients(const MetrizedGraph& g,
                                                 const ResistanceMatrix& R) {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i)
        out.push_back(contraction_coefficient(g, R, i));
    return out;
}

}  // namespace metrized

#endif
