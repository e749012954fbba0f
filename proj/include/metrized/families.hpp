#ifndef METRIZED_FAMILIES_HPP
#define METRIZED_FAMILIES_HPP

#include <string>
#include <vector>

#include "metrized/graph.hpp"

namespace metrized::families {

/// Cycle C_v, all edges the same length.
inline MetrizedGraph circle(int v, const Rat& len = Rat(1)) {
    if (v < 1) throw BadParams("circle needs v >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < v; ++i) es.push_back({i, (i + 1) % v, len});
    return MetrizedGraph(v, std::move(es));
}

/// Path P_v with given edge lengths (v-1 of them).
inline MetrizedGraph path(const std::vector<Rat>& lens) {
    int v = static_cast<int>(lens.size()) + 1;
    std::vector<Edge> es;
    for (int i = 0; i + 1 < v; ++i) es.push_back({i, i + 1, lens[static_cast<std::size_t>(i)]});
    return MetrizedGraph(v, std::move(es));
}

inline MetrizedGraph path(int v, const Rat& len = Rat(1)) {
    if (v < 1) throw BadParams("path needs v >= 1");
    return path(std::vector<Rat>(static_cast<std::size_t>(v - 1), len));
}

/// Star S_v: vertex 0 is the center, with given spoke lengths (v-1 of them).
inline MetrizedGraph star(const std::vector<Rat>& lens) {
    int v = static_cast<int>(lens.size()) + 1;
    std::vector<Edge> es;
    for (int i = 1; i < v; ++i) es.push_back({0, i, lens[static_cast<std::size_t>(i - 1)]});
    return MetrizedGraph(v, std::move(es));
}

inline MetrizedGraph star(int v, const Rat& len = Rat(1)) {
    if (v < 1) throw BadParams("star needs v >= 1");
    return star(std::vector<Rat>(static_cast<std::size_t>(v - 1), len));
}

namespace detail {

// Incrementally grown unit tree: add `count` leaves attached to `host`.
struct TreeBuilder {
    int n = 0;
    std::vector<Edge> es;

    int vertex() { return n++; }
    int child_of(int host) {
        int c = n++;
        es.push_back({host, c, Rat(1)});
        return c;
    }
    void leaves(int host, int count) {
        for (int i = 0; i < count; ++i) child_of(host);
    }
    MetrizedGraph done() { return MetrizedGraph(n, std::move(es)); }
};

inline void check_nonneg(std::initializer_list<int> params) {
    for (int p : params)
        if (p < 0) throw BadParams("family parameters must be nonnegative");
}

}  // namespace detail

// The beta trees are unit-length trees built from a small skeleton with leaf
// bundles of sizes given by the parameters. The layouts are pinned by the
// closed-form Wiener values they must reproduce (see tree_wiener.hpp).

/// Double broom: edge c0-c1, s leaves at c0, t leaves at c1. v = s+t+2.
inline MetrizedGraph beta1(int s, int t) {
    detail::check_nonneg({s, t});
    detail::TreeBuilder b;
    int c0 = b.vertex();
    int c1 = b.child_of(c0);
    b.leaves(c0, s);
    b.leaves(c1, t);
    return b.done();
}

/// Double broom with a 2-edge handle: c0-c1-c2, s leaves at c0, t at c2.
/// v = s+t+3.
inline MetrizedGraph beta2(int s, int t) {
    detail::check_nonneg({s, t});
    detail::TreeBuilder b;
    int c0 = b.vertex();
    int c1 = b.child_of(c0);
    int c2 = b.child_of(c1);
    b.leaves(c0, s);
    b.leaves(c2, t);
    return b.done();
}

/// Three hubs around a center, with s, t, k leaves on the hubs. v = s+t+k+4.
inline MetrizedGraph beta3(int s, int t, int k) {
    detail::check_nonneg({s, t, k});
    detail::TreeBuilder b;
    int c = b.vertex();
    b.leaves(b.child_of(c), s);
    b.leaves(b.child_of(c), t);
    b.leaves(b.child_of(c), k);
    return b.done();
}

/// beta3 plus m leaves directly on the center. v = s+t+k+m+4.
inline MetrizedGraph beta4(int s, int t, int k, int m) {
    detail::check_nonneg({s, t, k, m});
    detail::TreeBuilder b;
    int c = b.vertex();
    b.leaves(b.child_of(c), s);
    b.leaves(b.child_of(c), t);
    b.leaves(b.child_of(c), k);
    b.leaves(c, m);
    return b.done();
}

/// Two adjacent centers: center A carries hubs for s and k and m direct
/// leaves; center B carries a hub for n and t direct leaves. v = s+t+k+m+n+5.
inline MetrizedGraph beta5(int s, int t, int k, int m, int n) {
    detail::check_nonneg({s, t, k, m, n});
    detail::TreeBuilder b;
    int ca = b.vertex();
    int cb = b.child_of(ca);
    b.leaves(b.child_of(ca), s);
    b.leaves(b.child_of(ca), k);
    b.leaves(ca, m);
    b.leaves(b.child_of(cb), n);
    b.leaves(cb, t);
    return b.done();
}

/// beta5 plus one more hub on center B carrying h leaves. v = s+t+k+m+n+h+6.
inline MetrizedGraph beta6(int s, int t, int k, int m, int n, int h) {
    detail::check_nonneg({s, t, k, m, n, h});
    detail::TreeBuilder b;
    int ca = b.vertex();
    int cb = b.child_of(ca);
    b.leaves(b.child_of(ca), s);
    b.leaves(b.child_of(ca), k);
    b.leaves(ca, m);
    b.leaves(b.child_of(cb), n);
    b.leaves(cb, t);
    b.leaves(b.child_of(cb), h);
    return b.done();
}

}  // namespace metrized::families

#endif
