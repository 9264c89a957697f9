#pragma once

// Checking the claims attached to a generated graph.

#include "distcol/constructions.hpp"
#include "distcol/solver.hpp"
#include "distcol/structure.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace distcol {

enum class ClaimStatus { pass, fail, inconclusive };

inline const char *to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

struct ClaimOutcome {
    Claim claim;
    ClaimStatus status;
    std::string detail;
};

inline std::string describe(const Claim &c) {
    std::string s = to_string(c.kind);
    switch (c.kind) {
    case ClaimKind::vertex_power_clique:
    case ClaimKind::line_power_clique: s += " radius=" + std::to_string(c.radius); break;
    case ClaimKind::chi_vertex_exceeds:
    case ClaimKind::chi_edge_exceeds:
        s += " t=" + std::to_string(c.radius) + " threshold=" + std::to_string(c.value.value_or(0));
        break;
    case ClaimKind::is_tree: break;
    default: s += " = " + (c.value ? std::to_string(*c.value) : std::string("inf")); break;
    }
    return s;
}

/// Lowers (or raises) the radius of clique claims; used to probe sharpness.
inline Claim shift_radius(Claim c, Int shift) {
    if (c.kind == ClaimKind::vertex_power_clique || c.kind == ClaimKind::line_power_clique) {
        c.radius = std::max<Int>(0, c.radius + shift);
    }
    return c;
}

inline ClaimOutcome check_claim(const Multigraph &g, const Claim &c, const SolveOptions &options = {}) {
    auto verdict = [&](bool ok, std::string detail) {
        return ClaimOutcome{c, ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(detail)};
    };
    switch (c.kind) {
    case ClaimKind::vertex_count: {
        const auto n = static_cast<Int>(g.num_vertices());
        return verdict(c.value == n, "observed " + std::to_string(n));
    }
    case ClaimKind::edge_count: {
        const auto m = static_cast<Int>(g.num_edges());
        return verdict(c.value == m, "observed " + std::to_string(m));
    }
    case ClaimKind::max_degree: {
        const auto d = static_cast<Int>(max_degree(g));
        return verdict(c.value == d, "observed " + std::to_string(d));
    }
    case ClaimKind::girth: {
        const Distance gi = girth(g);
        const std::optional<Int> observed = gi ? std::optional<Int>(static_cast<Int>(*gi)) : std::nullopt;
        return verdict(observed == c.value, "observed " + (gi ? std::to_string(*gi) : std::string("inf")));
    }
    case ClaimKind::is_tree: {
        const bool tree = is_tree(g);
        return verdict(tree, tree ? "tree" : "not a tree");
    }
    case ClaimKind::vertex_power_clique: {
        const SimpleGraph p = power(underlying_simple(g), static_cast<std::size_t>(c.radius));
        return verdict(is_clique(p), std::to_string(p.num_edges()) + " of " +
                                         std::to_string(p.num_vertices() * (p.num_vertices() - 1) / 2) + " pairs");
    }
    case ClaimKind::line_power_clique: {
        const SimpleGraph p = power(line_graph(g), static_cast<std::size_t>(c.radius));
        const std::size_t n = p.num_vertices();
        return verdict(is_clique(p),
                       std::to_string(p.num_edges()) + " of " + std::to_string(n < 2 ? 0 : n * (n - 1) / 2) + " pairs");
    }
    case ClaimKind::chi_vertex_exceeds:
    case ClaimKind::chi_edge_exceeds: {
        const SolveReport r = c.kind == ClaimKind::chi_edge_exceeds ? distance_chromatic_index(g, c.radius, options)
                                                                    : distance_chromatic_number(g, c.radius, options);
        const auto threshold = static_cast<std::size_t>(c.value.value_or(0));
        const std::string detail = std::string(c.kind == ClaimKind::chi_edge_exceeds ? "chi'_" : "chi_") +
                                   std::to_string(c.radius) + " in [" + std::to_string(r.lower_bound) + ", " +
                                   std::to_string(r.upper_bound) + "], nodes " + std::to_string(r.nodes);
        if (r.lower_bound > threshold) {
            return {c, ClaimStatus::pass, detail};
        }
        if (r.upper_bound <= threshold) {
            return {c, ClaimStatus::fail, detail};
        }
        return {c, ClaimStatus::inconclusive, detail};
    }
    }
    return {c, ClaimStatus::fail, "unknown claim"};
}

inline std::vector<ClaimOutcome> check_claims(const Multigraph &g, const std::vector<Claim> &claims,
                                              const SolveOptions &options = {}) {
    std::vector<ClaimOutcome> out;
    out.reserve(claims.size());
    for (const Claim &c : claims) {
        out.push_back(check_claim(g, c, options));
    }
    return out;
}

} // namespace distcol
