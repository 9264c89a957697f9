#pragma once

// Generators for the tree, planar multigraph and odd-cycle families, each
// returned together with predicted counts and machine-checkable claims.
//
// Vertex numbering is deterministic: base graph first, then subdivision
// vertices in edge-id order, then tree vertices in BFS order per root.

#include "distcol/bounds.hpp"
#include "distcol/family.hpp"
#include "distcol/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace distcol {

enum class ClaimKind {
    vertex_count,
    edge_count,
    max_degree,
    girth,
    is_tree,
    vertex_power_clique, // G^radius is complete
    line_power_clique,   // L(G)^radius is complete
    chi_vertex_exceeds,  // chi(G^radius) > value
    chi_edge_exceeds,    // chi(L(G)^radius) > value
};

inline const char *to_string(ClaimKind k) {
    switch (k) {
    case ClaimKind::vertex_count: return "vertex_count";
    case ClaimKind::edge_count: return "edge_count";
    case ClaimKind::max_degree: return "max_degree";
    case ClaimKind::girth: return "girth";
    case ClaimKind::is_tree: return "is_tree";
    case ClaimKind::vertex_power_clique: return "vertex_power_clique";
    case ClaimKind::line_power_clique: return "line_power_clique";
    case ClaimKind::chi_vertex_exceeds: return "chi_vertex_exceeds";
    case ClaimKind::chi_edge_exceeds: return "chi_edge_exceeds";
    }
    return "unknown";
}

/// `value` holds counts, degrees, girth (empty = infinite) or the colour
/// threshold; `radius` holds the power for clique and chi claims.
struct Claim {
    ClaimKind kind;
    std::optional<Int> value;
    Int radius = 0;

    friend bool operator==(const Claim &, const Claim &) = default;
};

struct Construction {
    Family family;
    FamilyParams params;
    Multigraph graph;
    bounds::Counts predicted;
    std::vector<Claim> claims;
};

namespace detail {

/// Roots `copies` copies of the height-k internally d-regular tree at `root`:
/// the root gains `copies` children and every other non-leaf gets d-1
/// children, down to depth k. Vertices are created in BFS order.
inline void attach_trees(Multigraph &g, VertexId root, Int copies, Int k, Int d) {
    if (k == 0 || copies == 0) {
        return;
    }
    std::vector<VertexId> level{root};
    for (Int depth = 0; depth < k; ++depth) {
        std::vector<VertexId> next;
        const Int fan = depth == 0 ? copies : d - 1;
        for (VertexId parent : level) {
            for (Int i = 0; i < fan; ++i) {
                const VertexId child = g.add_vertex();
                g.add_edge(parent, child);
                next.push_back(child);
            }
        }
        level = std::move(next);
    }
}

inline void add_cycle(Multigraph &g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
    }
}

inline Multigraph octahedron_base(Int d, std::vector<VertexId> &pendants) {
    // a0,a1,a2 span the face carrying the bundles; b_i is antipodal to a_i.
    Multigraph g(6);
    const VertexId a[3] = {0, 1, 2};
    const VertexId b[3] = {3, 4, 5};
    for (int i = 0; i < 3; ++i) {
        for (Int m = 0; m < d / 2 - 1; ++m) {
            g.add_edge(a[i], a[(i + 1) % 3]);
        }
    }
    for (int i = 0; i < 3; ++i) {
        g.add_edge(b[i], b[(i + 1) % 3]);
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) {
                g.add_edge(a[i], b[j]);
            }
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (Int p = 0; p < d - 4; ++p) {
            const VertexId leaf = g.add_vertex();
            g.add_edge(b[i], leaf);
            pendants.push_back(leaf);
        }
    }
    return g;
}

/// Subdivides every edge that lies in a parallel bundle, in edge-id order.
/// Returns the new graph; subdivision vertices are appended to `centres`.
inline Multigraph subdivide_bundles(const Multigraph &g, std::vector<VertexId> &centres) {
    std::vector<bool> bundled(g.num_edges(), false);
    for (const Edge &e : g.edges()) {
        for (const Edge &f : g.edges()) {
            if (e.id != f.id && ((e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u))) {
                bundled[e.id] = true;
            }
        }
    }
    Multigraph out(g.num_vertices());
    std::vector<VertexId> centre_of(g.num_edges(), 0);
    for (const Edge &e : g.edges()) {
        if (bundled[e.id]) {
            centre_of[e.id] = out.add_vertex();
            centres.push_back(centre_of[e.id]);
        }
    }
    for (const Edge &e : g.edges()) {
        if (bundled[e.id]) {
            out.add_edge(e.u, centre_of[e.id]);
            out.add_edge(centre_of[e.id], e.v);
        } else {
            out.add_edge(e.u, e.v);
        }
    }
    return out;
}

} // namespace detail

/// Internally d-regular tree of height k rooted (vertex 0) at a leaf end.
inline Multigraph tree_T(Int k, Int d) {
    bounds::validate(Family::tree_T, {.d = d, .k = k});
    Multigraph g(1);
    detail::attach_trees(g, 0, 1, k, d);
    return g;
}

/// Tree with tau_edge(t,d) edges whose line-graph t-th power is complete:
/// the radius-(t+1)/2 ball around a vertex (odd t) or the radius-t/2 ball
/// around an edge (even t) of the infinite d-regular tree.
inline Multigraph extremal_tree_edge(Int t, Int d) {
    bounds::validate(Family::extremal_tree_edge, {.t = t, .d = d});
    if (t % 2 == 1) {
        Multigraph g(1);
        detail::attach_trees(g, 0, d, (t + 1) / 2, d);
        return g;
    }
    Multigraph g(2);
    g.add_edge(0, 1);
    detail::attach_trees(g, 0, d - 1, t / 2, d);
    detail::attach_trees(g, 1, d - 1, t / 2, d);
    return g;
}

/// Tree with tau_vertex(t,d) vertices whose t-th power is complete: the
/// radius-t/2 ball around a vertex (even t) or the radius-(t-1)/2 ball around
/// an edge (odd t).
inline Multigraph extremal_tree_vertex(Int t, Int d) {
    bounds::validate(Family::extremal_tree_vertex, {.t = t, .d = d});
    if (t % 2 == 0) {
        Multigraph g(1);
        detail::attach_trees(g, 0, d, t / 2, d);
        return g;
    }
    Multigraph g(2);
    g.add_edge(0, 1);
    detail::attach_trees(g, 0, d - 1, (t - 1) / 2, d);
    detail::attach_trees(g, 1, d - 1, (t - 1) / 2, d);
    return g;
}

/// Triangle with every edge of multiplicity d/2.
inline Multigraph shannon(Int d) {
    bounds::validate(Family::shannon, {.d = d});
    Multigraph g(3);
    for (VertexId i = 0; i < 3; ++i) {
        for (Int m = 0; m < d / 2; ++m) {
            g.add_edge(i, (i + 1) % 3);
        }
    }
    return g;
}

/// Octahedron whose face a0a1a2 has edges of multiplicity d/2-1 and whose
/// opposite face b0b1b2 has d-4 pendant edges per vertex.
inline Multigraph octahedron(Int d) {
    bounds::validate(Family::octahedron, {.d = d});
    std::vector<VertexId> pendants;
    return detail::octahedron_base(d, pendants);
}

inline Multigraph shannon_hierarchy(Int k, Int d) {
    bounds::validate(Family::shannon_hierarchy, {.d = d, .k = k});
    std::vector<VertexId> centres;
    Multigraph g = detail::subdivide_bundles(shannon(d), centres);
    for (VertexId c : centres) {
        detail::attach_trees(g, c, d - 2, k, d);
    }
    return g;
}

inline Multigraph octahedron_hierarchy(Int k, Int d) {
    bounds::validate(Family::octahedron_hierarchy, {.d = d, .k = k});
    std::vector<VertexId> pendants;
    std::vector<VertexId> centres;
    const Multigraph base = detail::octahedron_base(d, pendants);
    Multigraph g = detail::subdivide_bundles(base, centres);
    for (VertexId c : centres) {
        detail::attach_trees(g, c, d - 2, k, d);
    }
    for (VertexId p : pendants) {
        detail::attach_trees(g, p, d - 1, k, d);
    }
    return g;
}

/// Odd cycle of length ell with d-2 copies of T_{t/2,d} rooted at every
/// cycle vertex; no distance-t edge colouring with tau_edge(t,d) colours.
inline Multigraph odd_cycle_edge_cert(Int t, Int d) {
    bounds::validate(Family::odd_cycle_edge_cert, {.t = t, .d = d});
    const Int ell = bounds::edge_cert_cycle_length(t, d);
    Multigraph g(static_cast<std::size_t>(ell));
    detail::add_cycle(g, static_cast<std::size_t>(ell));
    for (Int i = 0; i < ell; ++i) {
        detail::attach_trees(g, static_cast<VertexId>(i), d - 2, t / 2, d);
    }
    return g;
}

/// Odd cycle of length ell with d-2 copies of T_{(t-1)/2,d} rooted at every
/// cycle vertex; no distance-t vertex colouring with tau_vertex(t,d) colours.
inline Multigraph odd_cycle_vertex_cert(Int t, Int d, Int ell) {
    bounds::validate(Family::odd_cycle_vertex_cert, {.t = t, .d = d, .ell = ell});
    Multigraph g(static_cast<std::size_t>(ell));
    detail::add_cycle(g, static_cast<std::size_t>(ell));
    for (Int i = 0; i < ell; ++i) {
        detail::attach_trees(g, static_cast<VertexId>(i), d - 2, (t - 1) / 2, d);
    }
    return g;
}

inline Multigraph path(Int n) {
    bounds::validate(Family::path, {.n = n});
    Multigraph g(static_cast<std::size_t>(n));
    for (Int i = 0; i + 1 < n; ++i) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    }
    return g;
}

inline Multigraph cycle(Int n) {
    bounds::validate(Family::cycle, {.n = n});
    Multigraph g(static_cast<std::size_t>(n));
    detail::add_cycle(g, static_cast<std::size_t>(n));
    return g;
}

namespace detail {

inline std::vector<Claim> family_claims(Family f, const FamilyParams &p, const bounds::Counts &c) {
    std::vector<Claim> claims{
        {ClaimKind::vertex_count, c.vertices},
        {ClaimKind::edge_count, c.edges},
    };
    auto add = [&](ClaimKind kind, std::optional<Int> value, Int radius = 0) {
        claims.push_back({kind, value, radius});
    };
    switch (f) {
    case Family::tree_T: {
        const Int k = *p.k;
        add(ClaimKind::is_tree, {});
        add(ClaimKind::max_degree, k == 0 ? 0 : (k == 1 ? 1 : *p.d));
        add(ClaimKind::girth, std::nullopt);
        break;
    }
    case Family::extremal_tree_edge:
        add(ClaimKind::is_tree, {});
        add(ClaimKind::max_degree, *p.d);
        add(ClaimKind::girth, std::nullopt);
        add(ClaimKind::line_power_clique, {}, *p.t);
        break;
    case Family::extremal_tree_vertex:
        add(ClaimKind::is_tree, {});
        add(ClaimKind::max_degree, *p.t == 1 ? 1 : *p.d);
        add(ClaimKind::girth, std::nullopt);
        add(ClaimKind::vertex_power_clique, {}, *p.t);
        break;
    case Family::shannon:
        add(ClaimKind::max_degree, *p.d);
        add(ClaimKind::girth, *p.d == 2 ? 3 : 2);
        add(ClaimKind::line_power_clique, {}, 1);
        break;
    case Family::octahedron:
        add(ClaimKind::max_degree, *p.d);
        add(ClaimKind::girth, 2);
        add(ClaimKind::line_power_clique, {}, 2);
        break;
    case Family::shannon_hierarchy:
        add(ClaimKind::max_degree, *p.d);
        add(ClaimKind::girth, 4);
        // At k = 0 a corner is at distance 3 from the far side's subdivision
        // vertices, so only k >= 1 carries the vertex clique.
        if (*p.k >= 1) {
            add(ClaimKind::vertex_power_clique, {}, 2 * *p.k + 2);
            add(ClaimKind::line_power_clique, {}, 2 * *p.k + 1);
        }
        break;
    case Family::octahedron_hierarchy:
        add(ClaimKind::max_degree, *p.d);
        add(ClaimKind::girth, 3);
        add(ClaimKind::vertex_power_clique, {}, 2 * *p.k + 3);
        if (*p.k >= 1) {
            add(ClaimKind::line_power_clique, {}, 2 * *p.k + 2);
        }
        break;
    case Family::odd_cycle_edge_cert:
        add(ClaimKind::max_degree, *p.d);
        add(ClaimKind::girth, bounds::edge_cert_cycle_length(*p.t, *p.d));
        add(ClaimKind::chi_edge_exceeds, bounds::tau_edge(*p.t, *p.d), *p.t);
        break;
    case Family::odd_cycle_vertex_cert:
        // t = 1 roots empty trees, leaving the bare cycle.
        add(ClaimKind::max_degree, *p.t == 1 ? 2 : *p.d);
        add(ClaimKind::girth, *p.ell);
        add(ClaimKind::chi_vertex_exceeds, bounds::tau_vertex(*p.t, *p.d), *p.t);
        break;
    case Family::path: {
        const Int n = *p.n;
        add(ClaimKind::is_tree, {});
        add(ClaimKind::max_degree, n <= 1 ? 0 : (n == 2 ? 1 : 2));
        add(ClaimKind::girth, std::nullopt);
        if (n >= 3) {
            add(ClaimKind::line_power_clique, {}, n - 2);
        }
        break;
    }
    case Family::cycle:
        add(ClaimKind::max_degree, 2);
        add(ClaimKind::girth, *p.n);
        break;
    }
    return claims;
}

} // namespace detail

inline Multigraph build_graph(Family f, const FamilyParams &p) {
    bounds::validate(f, p);
    switch (f) {
    case Family::tree_T: return tree_T(*p.k, *p.d);
    case Family::extremal_tree_edge: return extremal_tree_edge(*p.t, *p.d);
    case Family::extremal_tree_vertex: return extremal_tree_vertex(*p.t, *p.d);
    case Family::shannon: return shannon(*p.d);
    case Family::octahedron: return octahedron(*p.d);
    case Family::shannon_hierarchy: return shannon_hierarchy(*p.k, *p.d);
    case Family::octahedron_hierarchy: return octahedron_hierarchy(*p.k, *p.d);
    case Family::odd_cycle_edge_cert: return odd_cycle_edge_cert(*p.t, *p.d);
    case Family::odd_cycle_vertex_cert: return odd_cycle_vertex_cert(*p.t, *p.d, *p.ell);
    case Family::path: return path(*p.n);
    case Family::cycle: return cycle(*p.n);
    }
    throw std::logic_error("unhandled family");
}

/// Keeps only the parameters a family uses, so descriptors compare and
/// serialize canonically.
inline FamilyParams relevant_params(Family f, const FamilyParams &p) {
    switch (f) {
    case Family::tree_T:
    case Family::shannon_hierarchy:
    case Family::octahedron_hierarchy: return {.d = p.d, .k = p.k};
    case Family::extremal_tree_edge:
    case Family::extremal_tree_vertex:
    case Family::odd_cycle_edge_cert: return {.t = p.t, .d = p.d};
    case Family::shannon:
    case Family::octahedron: return {.d = p.d};
    case Family::odd_cycle_vertex_cert: return {.t = p.t, .d = p.d, .ell = p.ell};
    case Family::path:
    case Family::cycle: return {.n = p.n};
    }
    return p;
}

/// Claims attached to a family member (without building the graph).
inline std::vector<Claim> family_claims(Family f, const FamilyParams &params) {
    const FamilyParams p = relevant_params(f, params);
    return detail::family_claims(f, p, bounds::construction_counts(f, p));
}

inline Construction generate(Family f, const FamilyParams &params) {
    const FamilyParams p = relevant_params(f, params);
    const bounds::Counts predicted = bounds::construction_counts(f, p);
    return {f, p, build_graph(f, p), predicted, detail::family_claims(f, p, predicted)};
}

} // namespace distcol
