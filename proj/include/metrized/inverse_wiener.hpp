#ifndef METRIZED_INVERSE_WIENER_HPP
#define METRIZED_INVERSE_WIENER_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "metrized/graph.hpp"
#include "metrized/tree_wiener.hpp"

namespace metrized {

struct CapExceeded : GraphError {
    using GraphError::GraphError;
};
struct BoundNeedsLargerTrees : GraphError {
    using GraphError::GraphError;
};
struct MonotonicityViolation : GraphError {
    using GraphError::GraphError;
};

/// The Problem-I polynomial; equals W(beta5(s,t,k,m,n)) with unit lengths.
inline long f_value(long s, long t, long k, long m, long n) {
    long base = s + t + k + m + n + 4;
    return base * base + 2 * (s * k + s * t + k * t + m * n + k * n + s * n) +
           (n + 2) * (s + k) + (m + 2) * (s + k + t + 1) + n * (t + 5);
}

/// The Problem-II polynomial; equals W(beta6(s,t,k,m,n,h)) with unit lengths.
inline long g_value(long s, long t, long k, long m, long n, long h) {
    long base = s + t + k + m + n + h + 5;
    return base * base + 2 * (s * k + s * t + k * t + m * n + k * n + s * n) +
           (n + 4) * (s + k) + n * (t + 6) + (m + 2) * (s + k + t + 2) +
           h * (3 * s + 3 * k + 2 * n + 2 * m + t + 6);
}

enum class Poly { F, G };

/// Attained values in [1, bound], with one witness argument tuple per value.
struct AttainedSet {
    long bound = 0;
    std::vector<char> attained;             // index 1..bound
    std::map<long, std::vector<long>> witnesses;

    bool is_attained(long w) const {
        return w >= 1 && w <= bound && attained[static_cast<std::size_t>(w)];
    }
    std::vector<long> excluded() const {
        std::vector<long> out;
        for (long w = 1; w <= bound; ++w)
            if (!attained[static_cast<std::size_t>(w)]) out.push_back(w);
        return out;
    }
};

namespace detail {

// Strict coordinatewise monotonicity on a small grid; the enumeration's loop
// pruning depends on it.
inline void check_monotone(Poly poly) {
    const int lim = 3;
    auto val = [&](const std::array<long, 6>& a) {
        return poly == Poly::F ? f_value(a[0], a[1], a[2], a[3], a[4])
                               : g_value(a[0], a[1], a[2], a[3], a[4], a[5]);
    };
    int dims = poly == Poly::F ? 5 : 6;
    std::array<long, 6> a{};
    std::function<void(int)> rec = [&](int d) {
        if (d == dims) {
            long base = val(a);
            for (int i = 0; i < dims; ++i) {
                auto b = a;
                ++b[static_cast<std::size_t>(i)];
                if (val(b) <= base)
                    throw MonotonicityViolation("polynomial is not strictly increasing");
            }
            return;
        }
        for (long x = 0; x <= lim; ++x) {
            a[static_cast<std::size_t>(d)] = x;
            rec(d + 1);
        }
    };
    rec(0);
}

}  // namespace detail

/// All values of F (or G) up to `bound`, by pruned nested enumeration.
inline AttainedSet attained_values(Poly poly, long bound) {
    if (bound < 1) throw BadParams("bound must be >= 1");
    detail::check_monotone(poly);
    AttainedSet out;
    out.bound = bound;
    out.attained.assign(static_cast<std::size_t>(bound) + 1, 0);
    auto record = [&](long w, std::initializer_list<long> args) {
        if (w > bound) return;
        if (!out.attained[static_cast<std::size_t>(w)]) {
            out.attained[static_cast<std::size_t>(w)] = 1;
            out.witnesses.emplace(w, std::vector<long>(args));
        }
    };
    if (poly == Poly::F) {
        for (long s = 0; f_value(s, 0, 0, 0, 0) <= bound; ++s)
            for (long t = 0; f_value(s, t, 0, 0, 0) <= bound; ++t)
                for (long k = 0; f_value(s, t, k, 0, 0) <= bound; ++k)
                    for (long m = 0; f_value(s, t, k, m, 0) <= bound; ++m)
                        for (long n = 0;; ++n) {
                            long w = f_value(s, t, k, m, n);
                            if (w > bound) break;
                            record(w, {s, t, k, m, n});
                        }
    } else {
        for (long s = 0; g_value(s, 0, 0, 0, 0, 0) <= bound; ++s)
            for (long t = 0; g_value(s, t, 0, 0, 0, 0) <= bound; ++t)
                for (long k = 0; g_value(s, t, k, 0, 0, 0) <= bound; ++k)
                    for (long m = 0; g_value(s, t, k, m, 0, 0) <= bound; ++m)
                        for (long n = 0; g_value(s, t, k, m, n, 0) <= bound; ++n)
                            for (long h = 0;; ++h) {
                                long w = g_value(s, t, k, m, n, h);
                                if (w > bound) break;
                                record(w, {s, t, k, m, n, h});
                            }
    }
    return out;
}

/// Integers in [1, bound] never attained by the polynomial.
inline std::vector<long> excluded_integers(Poly poly, long bound) {
    return attained_values(poly, bound).excluded();
}

constexpr int kFreeTreeCap = 16;

/// All free (unrooted, non-isomorphic) trees on n vertices as unit-length
/// graphs. Rooted trees are generated by canonical level sequences and
/// deduplicated by a centroid-rooted canonical form.
class FreeTreeEnumerator {
  public:
    explicit FreeTreeEnumerator(int n) : n_(n) {
        if (n < 1 || n > kFreeTreeCap)
            throw CapExceeded("free-tree enumeration supports 1 <= n <= " +
                              std::to_string(kFreeTreeCap));
    }

    /// Invoke fn(edges) once per free tree; edges are parent links.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        if (n_ == 1) {
            fn(std::vector<std::pair<int, int>>{});
            return;
        }
        std::unordered_set<std::string> seen;
        // Beyer-Hedetniemi: level sequences of rooted trees in decreasing
        // lexicographic order, starting from the path.
        std::vector<int> L(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) L[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            auto edges = edges_from_levels(L);
            std::string canon = free_canonical_form(edges);
            if (seen.insert(std::move(canon)).second) fn(edges);
            // successor
            int p = -1;
            for (int i = n_ - 1; i >= 0; --i)
                if (L[static_cast<std::size_t>(i)] > 2) {
                    p = i;
                    break;
                }
            if (p < 0) break;
            int q = -1;
            for (int i = p - 1; i >= 0; --i)
                if (L[static_cast<std::size_t>(i)] == L[static_cast<std::size_t>(p)] - 1) {
                    q = i;
                    break;
                }
            for (int i = p; i < n_; ++i)
                L[static_cast<std::size_t>(i)] = L[static_cast<std::size_t>(i - (p - q))];
        }
    }

    std::vector<MetrizedGraph> all() const {
        std::vector<MetrizedGraph> out;
        for_each([&](const std::vector<std::pair<int, int>>& edges) {
            std::vector<Edge> es;
            es.reserve(edges.size());
            for (auto [u, v] : edges) es.push_back({u, v, Rat(1)});
            out.push_back(MetrizedGraph(n_, std::move(es)));
        });
        return out;
    }

    long count() const {
        long c = 0;
        for_each([&](const std::vector<std::pair<int, int>>&) { ++c; });
        return c;
    }

  private:
    std::vector<std::pair<int, int>> edges_from_levels(const std::vector<int>& L) const {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> stack;  // stack[d] = last vertex seen at level d+1
        for (int i = 0; i < n_; ++i) {
            int level = L[static_cast<std::size_t>(i)];
            stack.resize(static_cast<std::size_t>(level));
            stack[static_cast<std::size_t>(level - 1)] = i;
            if (level > 1) edges.push_back({stack[static_cast<std::size_t>(level - 2)], i});
        }
        return edges;
    }

    std::string free_canonical_form(const std::vector<std::pair<int, int>>& edges) const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
        for (auto [u, v] : edges) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        std::vector<int> size(static_cast<std::size_t>(n_), 0);
        std::function<int(int, int)> subtree = [&](int u, int p) {
            size[static_cast<std::size_t>(u)] = 1;
            for (int w : adj[static_cast<std::size_t>(u)])
                if (w != p) size[static_cast<std::size_t>(u)] += subtree(w, u);
            return size[static_cast<std::size_t>(u)];
        };
        subtree(0, -1);
        std::vector<int> centroids;
        std::function<void(int, int)> find = [&](int u, int p) {
            int heaviest = n_ - size[static_cast<std::size_t>(u)];
            for (int w : adj[static_cast<std::size_t>(u)])
                if (w != p) heaviest = std::max(heaviest, size[static_cast<std::size_t>(w)]);
            if (heaviest <= n_ / 2) centroids.push_back(u);
            for (int w : adj[static_cast<std::size_t>(u)])
                if (w != p) find(w, u);
        };
        find(0, -1);
        std::function<std::string(int, int)> encode = [&](int u, int p) {
            std::vector<std::string> subs;
            for (int w : adj[static_cast<std::size_t>(u)])
                if (w != p) subs.push_back(encode(w, u));
            std::sort(subs.begin(), subs.end());
            std::string s = "(";
            for (const std::string& t : subs) s += t;
            s += ")";
            return s;
        };
        std::string best;
        for (int c : centroids) {
            std::string s = encode(c, -1);
            if (best.empty() || s < best) best = std::move(s);
        }
        return best;
    }

    int n_;
};

inline std::vector<MetrizedGraph> enumerate_free_trees(int n) {
    return FreeTreeEnumerator(n).all();
}

/// Result of the forbidden-Wiener scan: missing values and one witness tree
/// (edge list) per attained value.
struct ForbiddenWienerResult {
    long bound = 0;
    std::vector<long> forbidden;
    std::map<long, std::vector<std::pair<int, int>>> witnesses;
};

/// Integers in [1, bound] that are not the Wiener index of any unit tree.
/// Complete because W >= (v-1)^2 forces v <= 1 + sqrt(bound).
inline ForbiddenWienerResult forbidden_wiener(long bound) {
    if (bound < 1) throw BadParams("bound must be >= 1");
    int max_v = 1 + static_cast<int>(std::sqrt(static_cast<double>(bound)));
    while (static_cast<long>(max_v) * max_v > bound) --max_v;  // (v-1)^2 <= bound
    ++max_v;
    if (max_v > kFreeTreeCap)
        throw BoundNeedsLargerTrees("bound " + std::to_string(bound) +
                                    " needs trees beyond the v <= " +
                                    std::to_string(kFreeTreeCap) + " cap");
    ForbiddenWienerResult out;
    out.bound = bound;
    std::vector<char> attained(static_cast<std::size_t>(bound) + 1, 0);
    for (int n = 2; n <= max_v; ++n) {
        FreeTreeEnumerator iter(n);
        iter.for_each([&](const std::vector<std::pair<int, int>>& edges) {
            std::vector<Edge> es;
            for (auto [u, v] : edges) es.push_back({u, v, Rat(1)});
            MetrizedGraph t(n, std::move(es));
            long w = wiener_via_splits(t);
            if (w >= 1 && w <= bound && !attained[static_cast<std::size_t>(w)]) {
                attained[static_cast<std::size_t>(w)] = 1;
                out.witnesses.emplace(w, edges);
            }
        });
    }
    for (long w = 1; w <= bound; ++w)
        if (!attained[static_cast<std::size_t>(w)]) out.forbidden.push_back(w);
    return out;
}

}  // namespace metrized

#endif
