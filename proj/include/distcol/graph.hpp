#pragma once

// Graph value types: a multigraph with first-class parallel edges, and a
// simple adjacency-set graph used for line graphs, powers and solver input.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace distcol {

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class EntityKind { vertex, edge };

inline const char *to_string(EntityKind kind) { return kind == EntityKind::vertex ? "vertex" : "edge"; }

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Undirected multigraph. Edge ids are dense (0..m-1) in insertion order and
/// parallel edges keep distinct ids. Loops are rejected.
class Multigraph {
  public:
    Multigraph() = default;
    explicit Multigraph(std::size_t n) : incidence_(n) {}

    VertexId add_vertex() {
        incidence_.emplace_back();
        return incidence_.size() - 1;
    }

    EdgeId add_edge(VertexId u, VertexId v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        const EdgeId id = edges_.size();
        edges_.push_back({id, u, v});
        incidence_[u].push_back(id);
        incidence_[v].push_back(id);
        return id;
    }

    std::size_t num_vertices() const { return incidence_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<Edge> &edges() const { return edges_; }

    const Edge &edge(EdgeId e) const {
        check_edge(e);
        return edges_[e];
    }

    /// Incident edge ids of v, in increasing id order.
    std::span<const EdgeId> incident(VertexId v) const {
        check_vertex(v);
        return incidence_[v];
    }

    /// Number of edge incidences, counting multiplicity.
    std::size_t degree(VertexId v) const { return incident(v).size(); }

    VertexId other_end(EdgeId e, VertexId v) const {
        const Edge &ed = edge(e);
        return ed.u == v ? ed.v : ed.u;
    }

    /// Visits the far endpoint of every incident edge (repeats for parallel edges).
    template <class F> void for_each_neighbour(VertexId v, F &&f) const {
        for (EdgeId e : incident(v)) {
            f(other_end(e, v));
        }
    }

    void check_vertex(VertexId v) const {
        if (v >= incidence_.size()) {
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range (n = " +
                                    std::to_string(incidence_.size()) + ")");
        }
    }

    void check_edge(EdgeId e) const {
        if (e >= edges_.size()) {
            throw std::out_of_range("edge id " + std::to_string(e) + " out of range (m = " +
                                    std::to_string(edges_.size()) + ")");
        }
    }

    friend bool operator==(const Multigraph &, const Multigraph &) = default;

  private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// Simple undirected graph with sorted adjacency lists.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : adjacency_(n) {}

    /// Builds from arbitrary neighbour lists; duplicates are merged. Throws on
    /// loops, out-of-range ids or asymmetric input.
    static SimpleGraph from_adjacency(std::vector<std::vector<VertexId>> adjacency) {
        SimpleGraph g;
        g.adjacency_ = std::move(adjacency);
        const std::size_t n = g.adjacency_.size();
        for (VertexId v = 0; v < n; ++v) {
            auto &list = g.adjacency_[v];
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            for (VertexId w : list) {
                if (w >= n) {
                    throw std::out_of_range("neighbour id " + std::to_string(w) + " out of range");
                }
                if (w == v) {
                    throw std::invalid_argument("loop at vertex " + std::to_string(v));
                }
            }
            g.edge_count_ += list.size();
        }
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId w : g.adjacency_[v]) {
                if (!std::binary_search(g.adjacency_[w].begin(), g.adjacency_[w].end(), v)) {
                    throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) + " and " +
                                                std::to_string(w));
                }
            }
        }
        g.edge_count_ /= 2;
        return g;
    }

    VertexId add_vertex() {
        adjacency_.emplace_back();
        return adjacency_.size() - 1;
    }

    /// Returns false if the edge was already present.
    bool add_edge(VertexId u, VertexId v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        auto &lu = adjacency_[u];
        auto it = std::lower_bound(lu.begin(), lu.end(), v);
        if (it != lu.end() && *it == v) {
            return false;
        }
        lu.insert(it, v);
        auto &lv = adjacency_[v];
        lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
        ++edge_count_;
        return true;
    }

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edge_count_; }

    std::span<const VertexId> neighbours(VertexId v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    std::size_t degree(VertexId v) const { return neighbours(v).size(); }

    bool has_edge(VertexId u, VertexId v) const {
        auto nb = neighbours(u);
        check_vertex(v);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    template <class F> void for_each_neighbour(VertexId v, F &&f) const {
        for (VertexId w : neighbours(v)) {
            f(w);
        }
    }

    void check_vertex(VertexId v) const {
        if (v >= adjacency_.size()) {
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range (n = " +
                                    std::to_string(adjacency_.size()) + ")");
        }
    }

    friend bool operator==(const SimpleGraph &, const SimpleGraph &) = default;

  private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

template <class G>
concept NeighbourGraph = requires(const G &g, VertexId v) {
    { g.num_vertices() } -> std::convertible_to<std::size_t>;
    g.for_each_neighbour(v, [](VertexId) {});
};

} // namespace distcol
