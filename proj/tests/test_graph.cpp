#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "metrized/families.hpp"
#include "metrized/graph.hpp"
#include "metrized/random_graph.hpp"

using namespace metrized;

TEST_CASE("build validates input") {
    MetrizedGraph g = build(2, {{0, 1, Rat(1)}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.total_length() == 1);

    MetrizedGraph c4 = families::circle(4);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.total_length() == 4);

    CHECK_THROWS_AS(build(3, {{0, 1, Rat(1)}}), DisconnectedGraph);
    CHECK_THROWS_AS(build(2, {{0, 1, Rat(0)}}), NonPositiveLength);
    CHECK_THROWS_AS(build(2, {{0, 1, Rat(-1)}}), NonPositiveLength);
    CHECK_THROWS_AS(build(2, {{0, 2, Rat(1)}}), BadIndex);
    CHECK_THROWS_AS(MetrizedGraph(0, {}), BadIndex);
}

TEST_CASE("contract_edge basics") {
    // P4, contract the middle edge
    MetrizedGraph p4 = families::path(4);
    auto [p3, map] = p4.contract_edge(1);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.total_length() == 2);
    CHECK(map[1] == map[2]);
    CHECK(map[0] != map[1]);

    // C4 -> C3
    MetrizedGraph c4 = families::circle(4);
    auto [c3, m2] = c4.contract_edge(0);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    for (const Edge& e : c3.edges()) CHECK_FALSE(e.is_self_loop());

    // two parallel edges, contract one -> self-loop of the other's length
    MetrizedGraph par = build(2, {{0, 1, Rat(2)}, {0, 1, Rat(5)}});
    auto [pt, m3] = par.contract_edge(0);
    CHECK(pt.vertex_count() == 1);
    REQUIRE(pt.edge_count() == 1);
    CHECK(pt.edge(0).is_self_loop());
    CHECK(pt.edge(0).len == 5);

    MetrizedGraph loop = build(1, {{0, 0, Rat(1)}});
    CHECK_THROWS_AS(loop.contract_edge(0), SelfLoopContraction);
    CHECK_THROWS_AS(par.contract_edge(7), BadEdgeId);
}

TEST_CASE("delete_edge_interior components") {
    MetrizedGraph c4 = families::circle(4);
    CHECK(c4.delete_edge_interior(0).size() == 1);
    CHECK_FALSE(c4.is_bridge(0));

    MetrizedGraph p4 = families::path(4);
    auto comps = p4.delete_edge_interior(1);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 2);
    CHECK(comps[1].size() == 2);
    CHECK(p4.is_bridge(1));

    MetrizedGraph withloop = build(2, {{0, 1, Rat(1)}, {1, 1, Rat(3)}});
    CHECK(withloop.delete_edge_interior(1).size() == 1);
}

TEST_CASE("family vertex counts match") {
    CHECK(families::star(4).valence(0) == 3);
    CHECK(families::beta1(1, 1).vertex_count() == 4);
    CHECK(families::beta2(2, 3).vertex_count() == 8);
    CHECK(families::beta3(1, 1, 1).vertex_count() == 7);
    CHECK(families::beta4(1, 1, 1, 1).vertex_count() == 8);
    CHECK(families::beta5(0, 0, 0, 0, 0).vertex_count() == 5);
    CHECK(families::beta6(0, 0, 0, 0, 0, 0).vertex_count() == 6);
    CHECK(families::beta6(1, 2, 3, 1, 2, 3).vertex_count() == 18);
    CHECK_THROWS_AS(families::beta1(-1, 0), BadParams);
}

TEST_CASE("admissible contraction sequences shrink by one per step") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        MetrizedGraph g = random_connected_multigraph(rng);
        int v = g.vertex_count();
        // greedily contract the first non-self-loop edge
        MetrizedGraph cur = g;
        int steps = 0;
        while (cur.vertex_count() > 1) {
            int pick = -1;
            for (int i = 0; i < cur.edge_count(); ++i)
                if (!cur.edge(i).is_self_loop()) {
                    pick = i;
                    break;
                }
            REQUIRE(pick >= 0);
            Rat before = cur.total_length();
            Rat elen = cur.edge(pick).len;
            cur = cur.contract_edge(pick).first;
            ++steps;
            CHECK(cur.total_length() == before - elen);
        }
        CHECK(steps == v - 1);
    }
}

TEST_CASE("apply_contractions composes the vertex map") {
    MetrizedGraph p5 = families::path(5);
    ContractionSeq seq{{0, 0}};  // contract first edge twice (re-resolved)
    auto [g, map] = apply_contractions(p5, seq);
    CHECK(g.vertex_count() == 3);
    CHECK(map[0] == map[1]);
    CHECK(map[1] == map[2]);
    CHECK(map[3] != map[0]);
}

TEST_CASE("tree edge deletion always splits in two") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        RandomGraphOptions opt;
        opt.max_vertices = 8;
        MetrizedGraph g = random_connected_multigraph(rng, opt);
        if (!g.is_tree()) continue;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto comps = g.delete_edge_interior(e);
            REQUIRE(comps.size() == 2);
            CHECK(static_cast<int>(comps[0].size() + comps[1].size()) == g.vertex_count());
        }
    }
}
