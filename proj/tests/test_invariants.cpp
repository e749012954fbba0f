#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "metrized/families.hpp"
#include "metrized/invariants.hpp"
#include "metrized/random_graph.hpp"

using namespace metrized;

namespace {

Rat random_len(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 12), den(1, 12);
    return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("kirchhoff index of cycles") {
    CHECK(kirchhoff_index(families::circle(4)) == 5);
    for (int v = 3; v <= 12; ++v)
        CHECK(kirchhoff_index(families::circle(v)) == rat(v * (v * v - 1), 12));
}

TEST_CASE("wiener index of small trees") {
    for (int v = 2; v <= 12; ++v) {
        CHECK(wiener_index(families::star(v)) == (v - 1) * (v - 1));
        CHECK(wiener_index(families::path(v)) == rat(v * (v * v - 1), 6));
    }
    // path on lengths a,b,c: W = 3(a+b+c) + b
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        Rat a = random_len(rng), b = random_len(rng), c = random_len(rng);
        CHECK(wiener_index(families::path({a, b, c})) == 3 * (a + b + c) + b);
    }
}

TEST_CASE("weighted star wiener") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        Rat a = random_len(rng), b = random_len(rng), c = random_len(rng);
        MetrizedGraph s4 =
            build(4, {{0, 1, a}, {0, 2, b}, {0, 3, c}});
        CHECK(wiener_index(s4) == 3 * (a + b + c));
    }
}

TEST_CASE("x and y on trees") {
    // every edge of a tree is a bridge: x = 0 and y = total length
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        RandomGraphOptions opt;
        opt.max_edges = 0;  // spanning tree only
        MetrizedGraph t = random_connected_multigraph(rng, opt);
        REQUIRE(t.is_tree());
        auto [x, y] = xy_invariants(t);
        CHECK(x == 0);
        CHECK(y == t.total_length());
        // Wiener and Kirchhoff agree on trees
        CHECK(wiener_index(t) == kirchhoff_index(t));
    }
}

TEST_CASE("x and y on cycles") {
    for (int v = 3; v <= 12; ++v) {
        auto [x, y] = xy_invariants(families::circle(v));
        CHECK(x == rat(v - 1, 2));
        CHECK(y == rat(v - 1, 2));
    }
}

TEST_CASE("two vertices joined by parallel unit edges") {
    MetrizedGraph g = build(2, {{0, 1, Rat(1)}, {0, 1, Rat(1)}});
    CHECK(kirchhoff_index(g) == rat(1, 2));
    auto [x, y] = xy_invariants(g);
    CHECK(y == rat(1, 2));  // Kf = y when v = 2
    CHECK(x + y == r_gamma(g));
}

TEST_CASE("x + y recovers the edge resistance sum") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        MetrizedGraph g = random_connected_multigraph(rng);
        auto [x, y] = xy_invariants(g);
        CHECK(x >= 0);
        CHECK(y >= 0);
        CHECK(x + y == r_gamma(g));
    }
}

TEST_CASE("x and y do not depend on the base vertex") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 25; ++trial) {
        RandomGraphOptions opt;
        opt.max_vertices = 8;
        MetrizedGraph g = random_connected_multigraph(rng, opt);
        auto ref = xy_invariants_at(g, 0);
        for (int p = 1; p < g.vertex_count(); ++p)
            CHECK(xy_invariants_at(g, p) == ref);
    }
}

TEST_CASE("index report is internally consistent") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 15; ++trial) {
        MetrizedGraph g = random_connected_multigraph(rng);
        IndexReport rep = index_report(g);
        CHECK(rep.v == g.vertex_count());
        CHECK(rep.e == g.edge_count());
        CHECK(rep.total_length == g.total_length());
        CHECK(rep.kirchhoff == kirchhoff_index(g));
        CHECK(rep.wiener == wiener_index(g));
        CHECK(rep.x + rep.y == rep.r_gamma);
        // shortest-path distance never exceeds, and resistance never exceeds it
        ResistanceMatrix R = resistance_matrix(g);
        auto dist = distance_matrix(g);
        for (int p = 0; p < rep.v; ++p)
            for (int q = 0; q < rep.v; ++q)
                CHECK(R.at(p, q) <= dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
        CHECK(rep.kirchhoff <= rep.wiener);
    }
}
