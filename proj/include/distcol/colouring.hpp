#pragma once

// Greedy and tree distance colourings, colouring verification, the
// contraction-based edge-colouring pipeline and the L^2-clique edge bound.

#include "distcol/bounds.hpp"
#include "distcol/graph.hpp"
#include "distcol/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distcol {

using Colour = std::uint32_t;

/// Total assignment of positive colours to the vertices or edges of a graph,
/// claimed to be a distance-t colouring.
struct Colouring {
    EntityKind kind = EntityKind::vertex;
    Int t = 1;
    std::vector<Colour> colours; // indexed by entity id, all >= 1

    std::size_t palette_size() const { return std::set<Colour>(colours.begin(), colours.end()).size(); }

    friend bool operator==(const Colouring &, const Colouring &) = default;
};

/// Colours vertices in `order`, each with the least positive colour absent
/// from its already-coloured neighbours.
inline Colouring greedy_colour(const SimpleGraph &g, std::span<const VertexId> order,
                               EntityKind kind = EntityKind::vertex, Int t = 1) {
    const std::size_t n = g.num_vertices();
    if (order.size() != n) {
        throw std::invalid_argument("greedy order has " + std::to_string(order.size()) + " entries for " +
                                    std::to_string(n) + " vertices");
    }
    std::vector<bool> seen(n, false);
    for (VertexId v : order) {
        if (v >= n || seen[v]) {
            throw std::invalid_argument("greedy order is not a permutation of the vertices");
        }
        seen[v] = true;
    }
    Colouring c{kind, t, std::vector<Colour>(n, 0)};
    std::vector<std::size_t> blocked; // blocked[col] == v+1 marks col used near v
    for (VertexId v : order) {
        for (VertexId w : g.neighbours(v)) {
            const Colour col = c.colours[w];
            if (col != 0) {
                if (blocked.size() <= col) {
                    blocked.resize(col + 1, 0);
                }
                blocked[col] = v + 1;
            }
        }
        Colour col = 1;
        while (col < blocked.size() && blocked[col] == v + 1) {
            ++col;
        }
        c.colours[v] = col;
    }
    return c;
}

/// BFS roots: a vertex, or an edge whose two endpoints start the search.
struct VertexRoot {
    VertexId v;
};
struct EdgeRoot {
    EdgeId e;
};

namespace detail {

inline void require_tree(const Multigraph &g) {
    if (!is_tree(g)) {
        throw std::invalid_argument("input graph is not a tree");
    }
}

/// Edges and vertices in first-traversal order of a BFS from the given
/// starting vertices. Children are visited in edge-id order.
inline std::pair<std::vector<EdgeId>, std::vector<VertexId>> bfs_traversal(const Multigraph &g,
                                                                            std::vector<VertexId> starts,
                                                                            std::optional<EdgeId> root_edge) {
    std::vector<bool> seen_v(g.num_vertices(), false);
    std::vector<bool> seen_e(g.num_edges(), false);
    std::vector<EdgeId> edges;
    if (root_edge) {
        seen_e[*root_edge] = true;
        edges.push_back(*root_edge);
    }
    for (VertexId s : starts) {
        seen_v[s] = true;
    }
    std::vector<VertexId> queue = std::move(starts);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (EdgeId e : g.incident(x)) {
            if (seen_e[e]) {
                continue;
            }
            seen_e[e] = true;
            edges.push_back(e);
            const VertexId y = g.other_end(e, x);
            if (!seen_v[y]) {
                seen_v[y] = true;
                queue.push_back(y);
            }
        }
    }
    return {std::move(edges), std::move(queue)};
}

} // namespace detail

/// Edges of a tree in first-traversal order of a BFS from a vertex.
inline std::vector<EdgeId> bfs_edge_order(const Multigraph &g, VertexRoot root) {
    detail::require_tree(g);
    g.check_vertex(root.v);
    return detail::bfs_traversal(g, {root.v}, std::nullopt).first;
}

/// Edges of a tree in BFS order from a root edge (which comes first).
inline std::vector<EdgeId> bfs_edge_order(const Multigraph &g, EdgeRoot root) {
    detail::require_tree(g);
    const Edge &e = g.edge(root.e);
    return detail::bfs_traversal(g, {e.u, e.v}, e.id).first;
}

inline std::vector<VertexId> bfs_vertex_order(const Multigraph &g, VertexRoot root) {
    g.check_vertex(root.v);
    return detail::bfs_traversal(g, {root.v}, std::nullopt).second;
}

inline std::vector<VertexId> bfs_vertex_order(const Multigraph &g, EdgeRoot root) {
    const Edge &e = g.edge(root.e);
    return detail::bfs_traversal(g, {e.u, e.v}, e.id).second;
}

/// Distance-t edge colouring of a tree with at most tau_edge(t, max degree)
/// colours: greedy on L(G)^t in BFS order from vertex 0 (odd t) or edge 0
/// (even t).
inline Colouring tree_distance_edge_colour(const Multigraph &g, Int t) {
    detail::require_tree(g);
    if (t < 1) {
        throw std::invalid_argument("distance t must be >= 1");
    }
    if (g.num_edges() == 0) {
        return {EntityKind::edge, t, {}};
    }
    const std::vector<EdgeId> order =
        t % 2 == 1 ? bfs_edge_order(g, VertexRoot{0}) : bfs_edge_order(g, EdgeRoot{0});
    return greedy_colour(power(line_graph(g), static_cast<std::size_t>(t)), order, EntityKind::edge, t);
}

/// Distance-t vertex colouring of a tree with at most tau_vertex(t, max
/// degree) colours: greedy on G^t in BFS order from vertex 0 (even t) or
/// edge 0 (odd t).
inline Colouring tree_distance_vertex_colour(const Multigraph &g, Int t) {
    detail::require_tree(g);
    if (t < 1) {
        throw std::invalid_argument("distance t must be >= 1");
    }
    const std::vector<VertexId> order = (t % 2 == 0 || g.num_edges() == 0) ? bfs_vertex_order(g, VertexRoot{0})
                                                                             : bfs_vertex_order(g, EdgeRoot{0});
    return greedy_colour(power(underlying_simple(g), static_cast<std::size_t>(t)), order, EntityKind::vertex, t);
}

struct ColouringCheck {
    bool valid = true;
    std::optional<std::pair<std::size_t, std::size_t>> conflict; // first violating pair, i < j

    explicit operator bool() const { return valid; }
};

/// Checks that no two distinct entities within distance t share a colour.
/// Edge distances are line-graph distances. Returns the lexicographically
/// first violating pair on failure.
inline ColouringCheck verify_distance_colouring(const Multigraph &g, Int t, const Colouring &c) {
    const bool edges = c.kind == EntityKind::edge;
    const std::size_t count = edges ? g.num_edges() : g.num_vertices();
    if (c.colours.size() != count) {
        throw std::invalid_argument("colouring covers " + std::to_string(c.colours.size()) + " of " +
                                    std::to_string(count) + " entities");
    }
    if (std::find(c.colours.begin(), c.colours.end(), Colour{0}) != c.colours.end()) {
        throw std::invalid_argument("colouring is partial (colour 0 present)");
    }
    if (t < 0) {
        throw std::invalid_argument("distance t must be >= 0");
    }
    const SimpleGraph host = edges ? line_graph(g) : underlying_simple(g);
    std::vector<std::size_t> stamp(count, static_cast<std::size_t>(-1));
    std::vector<VertexId> frontier;
    std::vector<VertexId> next;
    for (std::size_t s = 0; s < count; ++s) {
        std::optional<std::size_t> worst;
        frontier.assign(1, s);
        stamp[s] = s;
        for (Int level = 1; level <= t && !frontier.empty(); ++level) {
            next.clear();
            for (VertexId x : frontier) {
                for (VertexId y : host.neighbours(x)) {
                    if (stamp[y] != s) {
                        stamp[y] = s;
                        next.push_back(y);
                        if (y > s && c.colours[y] == c.colours[s] && (!worst || y < *worst)) {
                            worst = y;
                        }
                    }
                }
            }
            std::swap(frontier, next);
        }
        if (worst) {
            return {false, std::pair{s, *worst}};
        }
    }
    return {};
}

/// Distance-t edge colouring via contraction: a greedy proper edge colouring
/// splits E into matchings E_i; each E_i is contracted, the quotient is
/// distance-(t-1) vertex coloured greedily in degeneracy order, and the
/// per-class colourings are combined over disjoint palettes.
inline Colouring contraction_pipeline_edge_colour(const Multigraph &g, Int t) {
    if (t < 2) {
        throw std::invalid_argument("contraction pipeline needs t >= 2");
    }
    // Proper edge colouring, greedy over edge ids.
    std::vector<Colour> classes(g.num_edges(), 0);
    Colour class_count = 0;
    for (const Edge &e : g.edges()) {
        std::vector<bool> used;
        for (VertexId end : {e.u, e.v}) {
            for (EdgeId f : g.incident(end)) {
                if (classes[f] != 0) {
                    if (used.size() <= classes[f]) {
                        used.resize(classes[f] + 1, false);
                    }
                    used[classes[f]] = true;
                }
            }
        }
        Colour col = 1;
        while (col < used.size() && used[col]) {
            ++col;
        }
        classes[e.id] = col;
        class_count = std::max(class_count, col);
    }

    Colouring out{EntityKind::edge, t, std::vector<Colour>(g.num_edges(), 0)};
    Colour offset = 0;
    for (Colour i = 1; i <= class_count; ++i) {
        std::vector<EdgeId> members;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (classes[e] == i) {
                members.push_back(e);
            }
        }
        const Contraction quotient = contract_edges(g, members);
        const SimpleGraph reach = power(quotient.graph, static_cast<std::size_t>(t - 1));
        const DegeneracyOrder order = degeneracy_order(reach);
        const Colouring local = greedy_colour(reach, order.ordering);
        Colour used = 0;
        for (EdgeId e : members) {
            const Colour col = local.colours[quotient.vertex_map[g.edge(e).u]];
            out.colours[e] = offset + col;
            used = std::max(used, col);
        }
        offset += used;
    }
    // Compact to 1..palette so the palette size equals the largest colour.
    std::vector<Colour> sorted(out.colours);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Colour &col : out.colours) {
        col = static_cast<Colour>(std::lower_bound(sorted.begin(), sorted.end(), col) - sorted.begin() + 1);
    }
    return out;
}

struct EdgeBoundVerdict {
    std::size_t edges;
    std::size_t max_degree;
    std::size_t matching_number; // of the underlying simple graph
    bool edge_bound_holds;       // 2|E| <= 9 * max_degree
    bool matching_bound_holds;   // matching number <= 4

    bool holds() const { return edge_bound_holds && matching_bound_holds; }
};

/// For a multigraph whose L^2 is complete: checks |E| <= 9d/2 and that the
/// underlying simple graph has no matching of size 5.
inline EdgeBoundVerdict check_L2_clique_edge_bound(const Multigraph &g, MatchingGuard guard = {}) {
    if (!is_clique(power(line_graph(g), 2))) {
        throw std::invalid_argument("L(G)^2 is not complete");
    }
    EdgeBoundVerdict v{};
    v.edges = g.num_edges();
    v.max_degree = max_degree(g);
    v.matching_number = max_matching_bruteforce(underlying_simple(g), guard);
    v.edge_bound_holds = 2 * v.edges <= 9 * v.max_degree;
    v.matching_bound_holds = v.matching_number <= 4;
    return v;
}

} // namespace distcol
