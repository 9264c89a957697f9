#pragma once

// Closed-form quantities for distance colouring of trees, girth thresholds and
// predicted sizes of every generated family. All arithmetic is exact and
// overflow-checked.

#include "distcol/family.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace distcol::bounds {

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in subtraction");
    }
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return r;
}

inline Int checked_pow(Int base, Int exp) {
    Int r = 1;
    for (Int i = 0; i < exp; ++i) {
        r = checked_mul(r, base);
    }
    return r;
}

/// Division that must be exact; a remainder indicates a formula bug.
inline Int exact_div(Int num, Int den) {
    if (den == 0 || num % den != 0) {
        throw std::logic_error("inexact division " + std::to_string(num) + " / " + std::to_string(den));
    }
    return num / den;
}

inline void check_td(Int t, Int d) {
    if (t < 1) {
        throw std::invalid_argument("distance t must be >= 1, got " + std::to_string(t));
    }
    if (d < 3) {
        throw std::invalid_argument("maximum degree d must be >= 3, got " + std::to_string(d));
    }
}

/// Edge count of the internally d-regular tree of height k rooted at a leaf:
/// sum_{i<k} (d-1)^i.
inline Int iota(Int k, Int d) {
    if (k < 0) {
        throw std::invalid_argument("height k must be >= 0, got " + std::to_string(k));
    }
    if (d < 3) {
        throw std::invalid_argument("maximum degree d must be >= 3, got " + std::to_string(d));
    }
    Int sum = 0;
    Int term = 1;
    for (Int i = 0; i < k; ++i) {
        sum = checked_add(sum, term);
        term = checked_mul(term, d - 1);
    }
    return sum;
}

/// Largest distance-t chromatic index over trees of maximum degree d.
inline Int tau_edge(Int t, Int d) {
    check_td(t, d);
    if (t % 2 == 0) {
        return exact_div(checked_sub(checked_mul(2, checked_pow(d - 1, t / 2 + 1)), d), d - 2);
    }
    return exact_div(checked_sub(checked_mul(d, checked_pow(d - 1, (t + 1) / 2)), d), d - 2);
}

/// Largest distance-t chromatic number over trees of maximum degree d.
inline Int tau_vertex(Int t, Int d) {
    check_td(t, d);
    if (t % 2 == 0) {
        return exact_div(checked_sub(checked_mul(d, checked_pow(d - 1, t / 2)), 2), d - 2);
    }
    return exact_div(checked_sub(checked_mul(2, checked_pow(d - 1, (t + 1) / 2)), 2), d - 2);
}

enum class Parity { even, odd };

inline const char *to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct BoundsRecord {
    Int t;
    Int d;
    Int tau_edge;
    Int tau_vertex;
    Parity parity;

    friend bool operator==(const BoundsRecord &, const BoundsRecord &) = default;
};

inline BoundsRecord bounds_record(Int t, Int d) {
    return {t, d, tau_edge(t, d), tau_vertex(t, d), t % 2 == 0 ? Parity::even : Parity::odd};
}

/// Girth values above which planar graphs of large enough maximum degree
/// colour like trees. Edge values exist for odd t >= 3, the vertex value for
/// even t >= 2; the other parity admits no such threshold.
struct GirthThresholds {
    Int t;
    std::optional<Int> edge_main;      // needs d >= 4
    std::optional<Int> edge_tradeoff;  // needs d >= t + 2
    std::optional<Int> vertex_main;    // needs d >= 4
    Int edge_main_min_degree = 4;
    Int edge_tradeoff_min_degree = 0;
    Int vertex_main_min_degree = 4;

    friend bool operator==(const GirthThresholds &, const GirthThresholds &) = default;
};

inline GirthThresholds girth_thresholds(Int t) {
    if (t < 1) {
        throw std::invalid_argument("distance t must be >= 1, got " + std::to_string(t));
    }
    GirthThresholds g{t, {}, {}, {}};
    g.edge_tradeoff_min_degree = t + 2;
    if (t % 2 == 1 && t >= 3) {
        g.edge_main = checked_mul(6, checked_sub(checked_add(checked_mul(t, t), 2 * t), 1));
        g.edge_tradeoff = checked_sub(checked_mul(30, t), 6);
    }
    if (t % 2 == 0) {
        g.vertex_main = checked_mul(6, checked_sub(checked_add(checked_mul(t, t), t), 2));
    }
    return g;
}

struct Counts {
    Int vertices;
    Int edges;

    friend bool operator==(const Counts &, const Counts &) = default;
};

/// Length of the odd cycle used by the edge certificate: the odd member of
/// {(tau'-1)/2, (tau'+1)/2}. tau' is odd for even t, so exactly one qualifies.
inline Int edge_cert_cycle_length(Int t, Int d) {
    const Int tau = tau_edge(t, d);
    const Int lo = (tau - 1) / 2;
    return lo % 2 == 1 ? lo : lo + 1;
}

/// Validates the parameters of a family member; throws std::invalid_argument
/// naming the violated precondition.
inline void validate(Family f, const FamilyParams &p) {
    using detail::require;
    using detail::require_that;
    switch (f) {
    case Family::tree_T:
        require_that(require(p.k, "k", f) >= 0, f, "k >= 0");
        require_that(require(p.d, "d", f) >= 3, f, "d >= 3");
        return;
    case Family::extremal_tree_edge:
    case Family::extremal_tree_vertex:
        require_that(require(p.t, "t", f) >= 1, f, "t >= 1");
        require_that(require(p.d, "d", f) >= 3, f, "d >= 3");
        return;
    case Family::shannon: {
        const Int d = require(p.d, "d", f);
        require_that(d >= 2 && d % 2 == 0, f, "d even and d >= 2");
        return;
    }
    case Family::octahedron: {
        const Int d = require(p.d, "d", f);
        require_that(d >= 6 && d % 2 == 0, f, "d even and d >= 6");
        return;
    }
    case Family::shannon_hierarchy: {
        require_that(require(p.k, "k", f) >= 0, f, "k >= 0");
        const Int d = require(p.d, "d", f);
        require_that(d >= 4 && d % 2 == 0, f, "d even and d >= 4");
        return;
    }
    case Family::octahedron_hierarchy: {
        require_that(require(p.k, "k", f) >= 0, f, "k >= 0");
        const Int d = require(p.d, "d", f);
        require_that(d >= 6 && d % 2 == 0, f, "d even and d >= 6");
        return;
    }
    case Family::odd_cycle_edge_cert: {
        const Int t = require(p.t, "t", f);
        const Int d = require(p.d, "d", f);
        require_that(t >= 2 && t % 2 == 0, f, "t even and t >= 2");
        require_that(d >= 3, f, "d >= 3");
        require_that(edge_cert_cycle_length(t, d) > t, f, "cycle length ell > t");
        return;
    }
    case Family::odd_cycle_vertex_cert: {
        const Int t = require(p.t, "t", f);
        const Int d = require(p.d, "d", f);
        const Int ell = require(p.ell, "ell", f);
        require_that(t >= 1 && t % 2 == 1, f, "t odd and t >= 1");
        require_that(d >= 3, f, "d >= 3");
        require_that(ell % 2 == 1 && ell >= t + 2, f, "ell odd and ell >= t + 2");
        return;
    }
    case Family::path:
        require_that(require(p.n, "n", f) >= 1, f, "n >= 1");
        return;
    case Family::cycle:
        require_that(require(p.n, "n", f) >= 3, f, "n >= 3");
        return;
    }
}

/// Predicted vertex and edge counts of a family member.
inline Counts construction_counts(Family f, const FamilyParams &p) {
    validate(f, p);
    switch (f) {
    case Family::tree_T: {
        const Int edges = iota(*p.k, *p.d);
        return {edges + 1, edges};
    }
    case Family::extremal_tree_edge: {
        const Int edges = tau_edge(*p.t, *p.d);
        return {edges + 1, edges};
    }
    case Family::extremal_tree_vertex: {
        const Int vertices = tau_vertex(*p.t, *p.d);
        return {vertices, vertices - 1};
    }
    case Family::shannon:
        return {3, 3 * *p.d / 2};
    case Family::octahedron: {
        // Six octahedron vertices of degree d plus 3(d-4) pendant leaves.
        const Int d = *p.d;
        return {3 * d - 6, exact_div(9 * d - 12, 2)};
    }
    case Family::shannon_hierarchy: {
        const Int d = *p.d;
        const Int grow = checked_pow(d - 1, *p.k);
        return {checked_add(checked_mul(3 * d / 2, grow), 3), checked_mul(3 * d / 2, checked_add(grow, 1))};
    }
    case Family::octahedron_hierarchy: {
        // Subdividing the 3(d/2-1) bundle edges gives 9d/2-9 vertices and
        // 6d-9 edges; then d-2 tree copies per subdivision vertex and d-1 per
        // pendant leaf, each adding iota(k,d) vertices and edges.
        const Int d = *p.d;
        const Int copies = 3 * (d / 2 - 1) * (d - 2) + 3 * (d - 4) * (d - 1);
        const Int grown = checked_mul(copies, iota(*p.k, d));
        return {checked_add(9 * d / 2 - 9, grown), checked_add(6 * d - 9, grown)};
    }
    case Family::odd_cycle_edge_cert: {
        const Int ell = edge_cert_cycle_length(*p.t, *p.d);
        const Int size = checked_mul(ell, checked_add(1, checked_mul(*p.d - 2, iota(*p.t / 2, *p.d))));
        return {size, size};
    }
    case Family::odd_cycle_vertex_cert: {
        const Int size = checked_mul(*p.ell, checked_add(1, checked_mul(*p.d - 2, iota((*p.t - 1) / 2, *p.d))));
        return {size, size};
    }
    case Family::path:
        return {*p.n, *p.n - 1};
    case Family::cycle:
        return {*p.n, *p.n};
    }
    throw std::logic_error("unhandled family");
}

/// CSV table with columns t,d,tau_edge,tau_vertex,edge_main,vertex_main.
/// Absent thresholds are empty fields.
inline void write_bounds_csv(std::ostream &os, Int t_min, Int t_max, Int d_min, Int d_max) {
    os << "t,d,tau_edge,tau_vertex,edge_main,vertex_main\n";
    for (Int t = t_min; t <= t_max; ++t) {
        const GirthThresholds g = girth_thresholds(t);
        for (Int d = d_min; d <= d_max; ++d) {
            os << t << ',' << d << ',' << tau_edge(t, d) << ',' << tau_vertex(t, d) << ',';
            if (g.edge_main) {
                os << *g.edge_main;
            }
            os << ',';
            if (g.vertex_main) {
                os << *g.vertex_main;
            }
            os << '\n';
        }
    }
}

} // namespace distcol::bounds
