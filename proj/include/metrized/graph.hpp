#ifndef METRIZED_GRAPH_HPP
#define METRIZED_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metrized/rational.hpp"

namespace metrized {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DisconnectedGraph : GraphError {
    using GraphError::GraphError;
};
struct NonPositiveLength : GraphError {
    using GraphError::GraphError;
};
struct BadIndex : GraphError {
    using GraphError::GraphError;
};
struct BadEdgeId : GraphError {
    using GraphError::GraphError;
};
struct BadVertex : GraphError {
    using GraphError::GraphError;
};
struct SelfLoopContraction : GraphError {
    using GraphError::GraphError;
};
struct BadParams : GraphError {
    using GraphError::GraphError;
};

struct Edge {
    int u = 0;
    int v = 0;
    Rat len;

    bool is_self_loop() const { return u == v; }
};

/// Surjection old vertex index -> new vertex index produced by a contraction.
using VertexMap = std::vector<int>;

/// Finite connected multigraph with positive rational edge lengths.
/// Self-loops and parallel edges are allowed. Immutable after construction.
class MetrizedGraph {
  public:
    MetrizedGraph(int vertex_count, std::vector<Edge> edges,
                  std::vector<std::string> labels = {})
        : edges_(std::move(edges)), labels_(std::move(labels)) {
        if (vertex_count < 1) throw BadIndex("vertex count must be >= 1");
        v_ = vertex_count;
        if (labels_.empty()) {
            labels_.reserve(static_cast<std::size_t>(v_));
            for (int i = 0; i < v_; ++i) labels_.push_back(std::to_string(i));
        } else if (static_cast<int>(labels_.size()) != v_) {
            throw BadIndex("label count does not match vertex count");
        }
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.u >= v_ || e.v < 0 || e.v >= v_)
                throw BadIndex("edge endpoint out of range");
            if (e.len <= 0) throw NonPositiveLength("edge length must be positive");
        }
        check_connected();
    }

    int vertex_count() const { return v_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const {
        if (i < 0 || i >= edge_count()) throw BadEdgeId("no edge " + std::to_string(i));
        return edges_[static_cast<std::size_t>(i)];
    }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int p) const {
        check_vertex(p);
        return labels_[static_cast<std::size_t>(p)];
    }
    int vertex_by_label(const std::string& name) const {
        for (int i = 0; i < v_; ++i)
            if (labels_[static_cast<std::size_t>(i)] == name) return i;
        throw BadVertex("no vertex labeled '" + name + "'");
    }

    Rat total_length() const {
        Rat sum = 0;
        for (const Edge& e : edges_) sum += e.len;
        return sum;
    }

    /// Valence: self-loops count twice.
    int valence(int p) const {
        check_vertex(p);
        int d = 0;
        for (const Edge& e : edges_) {
            if (e.u == p) ++d;
            if (e.v == p) ++d;
        }
        return d;
    }

    void check_vertex(int p) const {
        if (p < 0 || p >= v_) throw BadVertex("no vertex " + std::to_string(p));
    }

    /// Contract edge e to a point. The merged vertex takes the smaller of the
    /// two endpoint indices; later vertices shift down by one. Edges parallel
    /// to e become self-loops.
    std::pair<MetrizedGraph, VertexMap> contract_edge(int e) const {
        const Edge& ce = edge(e);
        if (ce.is_self_loop())
            throw SelfLoopContraction("cannot contract self-loop " + std::to_string(e));
        const int keep = std::min(ce.u, ce.v);
        const int gone = std::max(ce.u, ce.v);
        VertexMap map(static_cast<std::size_t>(v_));
        for (int i = 0; i < v_; ++i) {
            if (i == gone)
                map[static_cast<std::size_t>(i)] = keep;
            else if (i > gone)
                map[static_cast<std::size_t>(i)] = i - 1;
            else
                map[static_cast<std::size_t>(i)] = i;
        }
        std::vector<Edge> out;
        out.reserve(edges_.size() - 1);
        std::vector<std::string> labels;
        labels.reserve(static_cast<std::size_t>(v_ - 1));
        for (int i = 0; i < v_; ++i)
            if (i != gone) labels.push_back(labels_[static_cast<std::size_t>(i)]);
        for (int i = 0; i < edge_count(); ++i) {
            if (i == e) continue;
            const Edge& old = edges_[static_cast<std::size_t>(i)];
            out.push_back({map[static_cast<std::size_t>(old.u)],
                           map[static_cast<std::size_t>(old.v)], old.len});
        }
        return {MetrizedGraph(v_ - 1, std::move(out), std::move(labels)), map};
    }

    /// Delete the interior of edge e and return the vertex sets of the
    /// resulting connected components (1 set, or 2 if e was a bridge).
    std::vector<std::vector<int>> delete_edge_interior(int e) const {
        (void)edge(e);
        std::vector<int> comp = components_without(e);
        int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
        std::vector<std::vector<int>> out(static_cast<std::size_t>(ncomp));
        for (int i = 0; i < v_; ++i)
            out[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].push_back(i);
        return out;
    }

    bool is_bridge(int e) const {
        const Edge& ed = edge(e);
        if (ed.is_self_loop()) return false;
        return delete_edge_interior(e).size() == 2;
    }

    bool is_tree() const { return edge_count() == v_ - 1; }

    bool has_unit_lengths() const {
        return std::all_of(edges_.begin(), edges_.end(),
                           [](const Edge& e) { return e.len == 1; });
    }

    /// Subgraph induced on a vertex subset (edges with both endpoints inside).
    /// Vertices are re-indexed by position in `verts`; must stay connected.
    MetrizedGraph induced(const std::vector<int>& verts) const {
        std::vector<int> pos(static_cast<std::size_t>(v_), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            check_vertex(verts[i]);
            pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
        }
        std::vector<Edge> es;
        std::vector<std::string> labels;
        for (int p : verts) labels.push_back(labels_[static_cast<std::size_t>(p)]);
        for (const Edge& e : edges_) {
            int a = pos[static_cast<std::size_t>(e.u)];
            int b = pos[static_cast<std::size_t>(e.v)];
            if (a >= 0 && b >= 0) es.push_back({a, b, e.len});
        }
        return MetrizedGraph(static_cast<int>(verts.size()), std::move(es),
                             std::move(labels));
    }

  private:
    // Component index per vertex when edge `skip` is removed (-1: none).
    std::vector<int> components_without(int skip) const {
        std::vector<int> comp(static_cast<std::size_t>(v_), -1);
        int next = 0;
        std::vector<int> stack;
        for (int s = 0; s < v_; ++s) {
            if (comp[static_cast<std::size_t>(s)] >= 0) continue;
            comp[static_cast<std::size_t>(s)] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int i = 0; i < edge_count(); ++i) {
                    if (i == skip) continue;
                    const Edge& e = edges_[static_cast<std::size_t>(i)];
                    int w = -1;
                    if (e.u == u) w = e.v;
                    else if (e.v == u) w = e.u;
                    else continue;
                    if (comp[static_cast<std::size_t>(w)] < 0) {
                        comp[static_cast<std::size_t>(w)] = next;
                        stack.push_back(w);
                    }
                }
            }
            ++next;
        }
        return comp;
    }

    void check_connected() const {
        std::vector<int> comp = components_without(-1);
        int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
        if (ncomp > 1) {
            std::string msg = "graph is disconnected (" + std::to_string(ncomp) +
                              " components; component of vertex 0:";
            for (int i = 0; i < v_; ++i)
                if (comp[static_cast<std::size_t>(i)] == 0)
                    msg += " " + labels_[static_cast<std::size_t>(i)];
            msg += ")";
            throw DisconnectedGraph(msg);
        }
    }

    int v_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

inline MetrizedGraph build(int vertex_count,
                           const std::vector<std::tuple<int, int, Rat>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, len] : edges) es.push_back({u, v, len});
    return MetrizedGraph(vertex_count, std::move(es));
}

/// Ordered list of edge ids, each resolved in the graph produced by the
/// previous contractions.
struct ContractionSeq {
    std::vector<int> edge_ids;
};

/// Apply a contraction sequence. Every step must contract an edge with
/// distinct endpoints (admissibility); the composed vertex map is returned.
inline std::pair<MetrizedGraph, VertexMap> apply_contractions(
    const MetrizedGraph& g, const ContractionSeq& seq) {
    MetrizedGraph cur = g;
    VertexMap total(static_cast<std::size_t>(g.vertex_count()));
    std::iota(total.begin(), total.end(), 0);
    for (int e : seq.edge_ids) {
        auto [next, map] = cur.contract_edge(e);
        for (int& t : total) t = map[static_cast<std::size_t>(t)];
        cur = std::move(next);
    }
    return {cur, total};
}

}  // namespace metrized

#endif
