#pragma once

// Independent reference implementations used only by the tests. They favour
// obviousness over speed and share no code with the library algorithms.

#include "distcol/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using distcol::Multigraph;
using distcol::SimpleGraph;
using distcol::VertexId;

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

/// Floyd-Warshall over an adjacency matrix.
inline std::vector<std::vector<std::size_t>> all_pairs(const std::vector<std::vector<bool>> &adj) {
    const std::size_t n = adj.size();
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (adj[i][j]) {
                d[i][j] = 1;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

inline std::vector<std::vector<bool>> vertex_adjacency(const Multigraph &g) {
    std::vector<std::vector<bool>> a(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
    for (const auto &e : g.edges()) {
        a[e.u][e.v] = a[e.v][e.u] = true;
    }
    return a;
}

inline std::vector<std::vector<bool>> vertex_adjacency(const SimpleGraph &g) {
    std::vector<std::vector<bool>> a(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (VertexId v : g.neighbours(u)) {
            a[u][v] = true;
        }
    }
    return a;
}

/// Edges are adjacent iff they share an endpoint (parallel edges share two).
inline std::vector<std::vector<bool>> edge_adjacency(const Multigraph &g) {
    const std::size_t m = g.num_edges();
    std::vector<std::vector<bool>> a(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) {
                continue;
            }
            const auto &e = g.edge(i);
            const auto &f = g.edge(j);
            a[i][j] = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
        }
    }
    return a;
}

/// Pairs within distance r (r >= 1) as a matrix.
inline std::vector<std::vector<bool>> power_matrix(const std::vector<std::vector<bool>> &adj, std::size_t r) {
    const auto d = all_pairs(adj);
    std::vector<std::vector<bool>> out(adj.size(), std::vector<bool>(adj.size(), false));
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (std::size_t j = 0; j < adj.size(); ++j) {
            out[i][j] = i != j && d[i][j] <= r;
        }
    }
    return out;
}

inline bool complete(const std::vector<std::vector<bool>> &a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i != j && !a[i][j]) {
                return false;
            }
        }
    }
    return true;
}

/// Shortest cycle by enumerating simple cycles with DFS (edge ids, so two
/// parallel edges form a 2-cycle). Exponential; small graphs only.
inline std::optional<std::size_t> girth(const Multigraph &g) {
    std::optional<std::size_t> best;
    std::vector<bool> on_path(g.num_vertices(), false);
    std::function<void(VertexId, VertexId, std::size_t, std::size_t)> dfs = [&](VertexId start, VertexId v,
                                                                                 std::size_t via, std::size_t len) {
        for (std::size_t e : g.incident(v)) {
            if (e == via) {
                continue;
            }
            const VertexId w = g.other_end(e, v);
            if (w == start) {
                if (!best || len + 1 < *best) {
                    best = len + 1;
                }
                continue;
            }
            if (w < start || on_path[w]) {
                continue;
            }
            on_path[w] = true;
            dfs(start, w, e, len + 1);
            on_path[w] = false;
        }
    };
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        on_path[s] = true;
        dfs(s, s, static_cast<std::size_t>(-1), 0);
        on_path[s] = false;
    }
    return best;
}

/// Tutte-Berge: nu(G) = min over U of (|V| + |U| - odd(G - U)) / 2.
inline std::size_t tutte_berge(const SimpleGraph &g) {
    const std::size_t n = g.num_vertices();
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> comp(n, -1);
        std::size_t odd = 0;
        int label = 0;
        for (VertexId s = 0; s < n; ++s) {
            if ((mask >> s) & 1u || comp[s] != -1) {
                continue;
            }
            std::vector<VertexId> stack{s};
            comp[s] = label;
            std::size_t size = 0;
            while (!stack.empty()) {
                const VertexId x = stack.back();
                stack.pop_back();
                ++size;
                for (VertexId y : g.neighbours(x)) {
                    if (!((mask >> y) & 1u) && comp[y] == -1) {
                        comp[y] = label;
                        stack.push_back(y);
                    }
                }
            }
            odd += size % 2;
            ++label;
        }
        const std::size_t u = static_cast<std::size_t>(__builtin_popcount(mask));
        best = std::min(best, (n + u - odd) / 2);
    }
    return best;
}

/// Chromatic number by enumerating restricted growth strings (every set
/// partition of the vertices once) and keeping the fewest independent blocks.
inline std::size_t chromatic_number(const std::vector<std::vector<bool>> &adj) {
    const std::size_t n = adj.size();
    if (n == 0) {
        return 0;
    }
    std::vector<std::size_t> block(n, 0);
    std::size_t best = n;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t blocks) {
        if (v == n) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (adj[i][j] && block[i] == block[j]) {
                        return;
                    }
                }
            }
            best = std::min(best, blocks);
            return;
        }
        for (std::size_t b = 0; b <= blocks && b < n; ++b) {
            block[v] = b;
            rec(v + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return best;
}

inline Multigraph random_multigraph(std::mt19937_64 &rng, std::size_t n, std::size_t m) {
    Multigraph g(n);
    if (n < 2) {
        return g;
    }
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    while (g.num_edges() < m) {
        const VertexId u = pick(rng);
        const VertexId v = pick(rng);
        if (u != v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline SimpleGraph random_simple(std::mt19937_64 &rng, std::size_t n, double p) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

/// Random tree on n >= delta + 1 vertices whose maximum degree is exactly
/// delta: a star of degree delta, then each new vertex hangs off a uniformly
/// chosen vertex that still has room.
inline Multigraph random_tree(std::mt19937_64 &rng, std::size_t n, std::size_t delta) {
    Multigraph g(delta + 1);
    for (VertexId v = 1; v <= delta; ++v) {
        g.add_edge(0, v);
    }
    while (g.num_vertices() < n) {
        std::vector<VertexId> open;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (g.degree(v) < delta) {
                open.push_back(v);
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        const VertexId parent = open[pick(rng)];
        const VertexId child = g.add_vertex();
        g.add_edge(parent, child);
    }
    // Relabel so the maximum-degree vertex is not always vertex 0.
    std::vector<VertexId> perm(g.num_vertices());
    for (VertexId v = 0; v < perm.size(); ++v) {
        perm[v] = v;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto &e : g.edges()) {
        edges.emplace_back(perm[e.u], perm[e.v]);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    Multigraph out(g.num_vertices());
    for (const auto &[u, v] : edges) {
        out.add_edge(u, v);
    }
    return out;
}

} // namespace oracle
