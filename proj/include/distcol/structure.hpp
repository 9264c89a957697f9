#pragma once

// Structural machinery over Multigraph/SimpleGraph: line graph, powers,
// distances, girth, contraction, degeneracy and exhaustive matching.

#include "distcol/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace distcol {

/// Distance value; std::nullopt stands for "unreachable" / infinite.
using Distance = std::optional<std::size_t>;

inline SimpleGraph underlying_simple(const Multigraph &g) {
    SimpleGraph s(g.num_vertices());
    for (const Edge &e : g.edges()) {
        s.add_edge(e.u, e.v);
    }
    return s;
}

/// One vertex per edge id; two vertices adjacent iff the edges share an endpoint.
inline SimpleGraph line_graph(const Multigraph &g) {
    std::vector<std::vector<VertexId>> adjacency(g.num_edges());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                adjacency[inc[i]].push_back(inc[j]);
                adjacency[inc[j]].push_back(inc[i]);
            }
        }
    }
    return SimpleGraph::from_adjacency(std::move(adjacency));
}

/// BFS distances from source, truncated at max_depth (entities further away
/// stay unreachable).
template <NeighbourGraph G>
std::vector<Distance> bfs_distances(const G &g, VertexId source,
                                    std::size_t max_depth = static_cast<std::size_t>(-1)) {
    if (source >= g.num_vertices()) {
        throw std::out_of_range("source vertex " + std::to_string(source) + " out of range");
    }
    std::vector<Distance> dist(g.num_vertices());
    std::queue<VertexId> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const VertexId x = frontier.front();
        frontier.pop();
        if (*dist[x] == max_depth) {
            continue;
        }
        g.for_each_neighbour(x, [&](VertexId y) {
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                frontier.push(y);
            }
        });
    }
    return dist;
}

/// Distances from a vertex or an edge of a multigraph. Edge distances are
/// distances in the line graph, so parallel edges are at distance 1.
inline std::vector<Distance> bfs_distances(const Multigraph &g, std::size_t source, EntityKind kind) {
    if (kind == EntityKind::vertex) {
        return bfs_distances(g, static_cast<VertexId>(source));
    }
    g.check_edge(source);
    return bfs_distances(line_graph(g), source);
}

/// Adjacency iff two distinct vertices are at distance <= t. t = 0 yields the
/// edgeless graph on the same vertex set.
inline SimpleGraph power(const SimpleGraph &g, std::size_t t) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<VertexId>> adjacency(n);
    std::vector<VertexId> stamp(n, static_cast<VertexId>(-1));
    std::vector<VertexId> frontier;
    std::vector<VertexId> next;
    for (VertexId s = 0; s < n && t > 0; ++s) {
        frontier.assign(1, s);
        stamp[s] = s;
        for (std::size_t level = 1; level <= t && !frontier.empty(); ++level) {
            next.clear();
            for (VertexId x : frontier) {
                for (VertexId y : g.neighbours(x)) {
                    if (stamp[y] != s) {
                        stamp[y] = s;
                        next.push_back(y);
                        adjacency[s].push_back(y);
                    }
                }
            }
            std::swap(frontier, next);
        }
    }
    return SimpleGraph::from_adjacency(std::move(adjacency));
}

struct DistanceClass {
    EntityKind kind;
    std::size_t centre;
    std::size_t radius;
    std::vector<std::size_t> members; // sorted, excludes centre

    friend bool operator==(const DistanceClass &, const DistanceClass &) = default;
};

/// The distance-`radius` neighbourhood of a vertex or edge, centre excluded.
inline DistanceClass neighbourhood(const Multigraph &g, std::size_t centre, std::size_t radius, EntityKind kind) {
    std::vector<Distance> dist;
    if (kind == EntityKind::vertex) {
        dist = bfs_distances(g, static_cast<VertexId>(centre), radius);
    } else {
        g.check_edge(centre);
        dist = bfs_distances(line_graph(g), centre, radius);
    }
    DistanceClass out{kind, centre, radius, {}};
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (i != centre && dist[i] && *dist[i] <= radius) {
            out.members.push_back(i);
        }
    }
    return out;
}

template <NeighbourGraph G> std::vector<std::vector<VertexId>> connected_components(const G &g) {
    std::vector<std::vector<VertexId>> components;
    std::vector<bool> seen(g.num_vertices(), false);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<VertexId> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            g.for_each_neighbour(comp[i], [&](VertexId y) {
                if (!seen[y]) {
                    seen[y] = true;
                    comp.push_back(y);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

inline std::size_t max_degree(const Multigraph &g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

inline std::size_t max_degree(const SimpleGraph &g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

/// Connected with m = n - 1 (which also rules out parallel edges).
inline bool is_tree(const Multigraph &g) {
    return g.num_vertices() >= 1 && g.num_edges() + 1 == g.num_vertices() && connected_components(g).size() == 1;
}

inline bool is_clique(const SimpleGraph &g) {
    const std::size_t n = g.num_vertices();
    return n < 2 || g.num_edges() == n * (n - 1) / 2;
}

/// Shortest cycle length; a pair of parallel edges is a 2-cycle. Forests give nullopt.
inline Distance girth(const Multigraph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<VertexId> seen_from(n, static_cast<VertexId>(-1));
    for (VertexId v = 0; v < n; ++v) {
        for (EdgeId e : g.incident(v)) {
            const VertexId w = g.other_end(e, v);
            if (seen_from[w] == v) {
                return 2;
            }
            seen_from[w] = v;
        }
    }

    Distance best;
    std::vector<std::size_t> dist(n);
    std::vector<EdgeId> parent_edge(n);
    std::vector<VertexId> stamp(n, static_cast<VertexId>(-1));
    std::vector<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
        queue.assign(1, root);
        stamp[root] = root;
        dist[root] = 0;
        parent_edge[root] = static_cast<EdgeId>(-1);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId x = queue[head];
            if (best && 2 * dist[x] + 1 >= *best) {
                break;
            }
            for (EdgeId e : g.incident(x)) {
                if (e == parent_edge[x]) {
                    continue;
                }
                const VertexId y = g.other_end(e, x);
                if (stamp[y] != root) {
                    stamp[y] = root;
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = e;
                    queue.push_back(y);
                } else {
                    const std::size_t len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) {
                        best = len;
                    }
                }
            }
        }
    }
    return best;
}

/// Result of contracting a set of edges: the simple quotient graph and the
/// quotient vertex of every original vertex.
struct Contraction {
    SimpleGraph graph;
    std::vector<VertexId> vertex_map;
};

/// Merges the endpoints of every listed edge (union-find), then drops loops
/// and parallel edges. Quotient vertices are numbered by smallest member.
template <class EdgeRange> Contraction contract_edges(const Multigraph &g, const EdgeRange &edge_ids) {
    const std::size_t n = g.num_vertices();
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (EdgeId e : edge_ids) {
        const Edge &ed = g.edge(e);
        VertexId a = find(ed.u);
        VertexId b = find(ed.v);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    Contraction out;
    out.vertex_map.assign(n, 0);
    std::vector<VertexId> label(n, static_cast<VertexId>(-1));
    std::size_t count = 0;
    for (VertexId v = 0; v < n; ++v) {
        const VertexId r = find(v);
        if (label[r] == static_cast<VertexId>(-1)) {
            label[r] = count++;
        }
        out.vertex_map[v] = label[r];
    }
    out.graph = SimpleGraph(count);
    for (const Edge &ed : g.edges()) {
        const VertexId a = out.vertex_map[ed.u];
        const VertexId b = out.vertex_map[ed.v];
        if (a != b) {
            out.graph.add_edge(a, b);
        }
    }
    return out;
}

inline Contraction contract_edges(const Multigraph &g, std::initializer_list<EdgeId> edge_ids) {
    return contract_edges(g, std::vector<EdgeId>(edge_ids));
}

struct DegeneracyOrder {
    std::vector<VertexId> ordering; // reverse removal order
    std::size_t degeneracy = 0;
};

/// Repeatedly removes a minimum-degree vertex (lowest id on ties).
inline DegeneracyOrder degeneracy_order(const SimpleGraph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> deg(n);
    std::set<std::pair<std::size_t, VertexId>> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<bool> removed(n, false);
    DegeneracyOrder out;
    out.ordering.reserve(n);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        out.degeneracy = std::max(out.degeneracy, d);
        out.ordering.push_back(v);
        for (VertexId w : g.neighbours(v)) {
            if (!removed[w]) {
                queue.erase({deg[w], w});
                queue.emplace(--deg[w], w);
            }
        }
    }
    std::reverse(out.ordering.begin(), out.ordering.end());
    return out;
}

struct MatchingGuard {
    std::size_t max_edges = 24;
    std::size_t max_vertices = 14;
};

class size_guard_error : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Exact maximum matching size by memoised exhaustive search. Refuses inputs
/// exceeding both guard limits.
inline std::size_t max_matching_bruteforce(const SimpleGraph &g, MatchingGuard guard = {}) {
    if (g.num_edges() > guard.max_edges && g.num_vertices() > guard.max_vertices) {
        throw size_guard_error("matching search guard exceeded: n = " + std::to_string(g.num_vertices()) +
                               ", m = " + std::to_string(g.num_edges()) + " (limits n <= " +
                               std::to_string(guard.max_vertices) + " or m <= " + std::to_string(guard.max_edges) +
                               ")");
    }
    // Isolated vertices never matter; the rest must fit a 64-bit mask.
    std::vector<VertexId> index(g.num_vertices(), static_cast<VertexId>(-1));
    std::vector<VertexId> active;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) > 0) {
            index[v] = active.size();
            active.push_back(v);
        }
    }
    if (active.size() > 64) {
        throw size_guard_error("matching search supports at most 64 non-isolated vertices");
    }
    std::vector<std::uint64_t> nbr(active.size(), 0);
    for (std::size_t i = 0; i < active.size(); ++i) {
        for (VertexId w : g.neighbours(active[i])) {
            nbr[i] |= std::uint64_t{1} << index[w];
        }
    }
    std::unordered_map<std::uint64_t, std::size_t> memo;
    auto solve = [&](auto &&self, std::uint64_t free) -> std::size_t {
        if (free == 0) {
            return 0;
        }
        if (auto it = memo.find(free); it != memo.end()) {
            return it->second;
        }
        const int v = std::countr_zero(free);
        const std::uint64_t rest = free & ~(std::uint64_t{1} << v);
        std::size_t best = self(self, rest);
        for (std::uint64_t cand = nbr[v] & rest; cand != 0; cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            best = std::max(best, 1 + self(self, rest & ~(std::uint64_t{1} << w)));
        }
        memo.emplace(free, best);
        return best;
    };
    const std::uint64_t all = active.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << active.size()) - 1;
    return solve(solve, all);
}

} // namespace distcol
