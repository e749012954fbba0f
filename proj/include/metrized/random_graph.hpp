#ifndef METRIZED_RANDOM_GRAPH_HPP
#define METRIZED_RANDOM_GRAPH_HPP

#include <algorithm>
#include <random>

#include "metrized/graph.hpp"

namespace metrized {

struct RandomGraphOptions {
    int min_vertices = 2;
    int max_vertices = 7;
    int max_edges = 10;
    int max_numerator = 16;
    int max_denominator = 16;
    // Per extra edge beyond the spanning tree, in percent.
    int self_loop_pct = 15;
    int parallel_pct = 25;
};

/// Seeded random connected multigraph: a random spanning tree plus extra
/// edges, some of them self-loops or duplicates of existing edges.
/// Deterministic for a given engine state.
inline MetrizedGraph random_connected_multigraph(std::mt19937_64& rng,
                                                 const RandomGraphOptions& opt = {}) {
    std::uniform_int_distribution<int> vdist(opt.min_vertices, opt.max_vertices);
    int v = vdist(rng);
    auto length = [&]() {
        std::uniform_int_distribution<int> num(1, opt.max_numerator);
        std::uniform_int_distribution<int> den(1, opt.max_denominator);
        return rat(num(rng), den(rng));
    };
    std::vector<Edge> edges;
    for (int i = 1; i < v; ++i) {
        std::uniform_int_distribution<int> host(0, i - 1);
        edges.push_back({host(rng), i, length()});
    }
    std::uniform_int_distribution<int> extra_dist(0, std::max(0, opt.max_edges - (v - 1)));
    int extra = extra_dist(rng);
    std::uniform_int_distribution<int> pct(0, 99);
    std::uniform_int_distribution<int> vert(0, v - 1);
    for (int i = 0; i < extra; ++i) {
        int roll = pct(rng);
        if (roll < opt.self_loop_pct) {
            int u = vert(rng);
            edges.push_back({u, u, length()});
        } else if (roll < opt.self_loop_pct + opt.parallel_pct && !edges.empty()) {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(edges.size()) - 1);
            const Edge& base = edges[static_cast<std::size_t>(pick(rng))];
            edges.push_back({base.u, base.v, length()});
        } else {
            edges.push_back({vert(rng), vert(rng), length()});
        }
    }
    return MetrizedGraph(v, std::move(edges));
}

}  // namespace metrized

#endif
