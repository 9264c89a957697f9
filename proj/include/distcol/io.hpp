#pragma once

// JSON and DOT serialization.
//
//   graph:     {"n": int, "edges": [[u, v], ...]}   (edge id = list index)
//   colouring: {"kind": "edge"|"vertex", "t": int, "colours": [int, ...]}
//
// Generated graphs additionally carry a "descriptor" object with the family,
// its parameters, predicted counts and claims.

#include "distcol/constructions.hpp"
#include "distcol/colouring.hpp"
#include "distcol/graph.hpp"
#include "distcol/solver.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace distcol::io {

using nlohmann::json;

class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline json to_json(const Multigraph &g) {
    json edges = json::array();
    for (const Edge &e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

namespace detail {

inline Int get_int(const json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw parse_error(std::string("missing or non-integer field '") + key + "'");
    }
    return j.at(key).get<Int>();
}

inline ClaimKind parse_claim_kind(const std::string &name) {
    for (int i = 0; i <= static_cast<int>(ClaimKind::chi_edge_exceeds); ++i) {
        const auto kind = static_cast<ClaimKind>(i);
        if (name == distcol::to_string(kind)) {
            return kind;
        }
    }
    throw parse_error("unknown claim kind '" + name + "'");
}

} // namespace detail

inline Multigraph graph_from_json(const json &j) {
    if (!j.is_object()) {
        throw parse_error("graph JSON must be an object");
    }
    const Int n = detail::get_int(j, "n");
    if (n < 0) {
        throw parse_error("vertex count must be non-negative");
    }
    if (!j.contains("edges") || !j.at("edges").is_array()) {
        throw parse_error("missing 'edges' array");
    }
    Multigraph g(static_cast<std::size_t>(n));
    for (const json &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw parse_error("each edge must be a pair of integers");
        }
        const Int u = e[0].get<Int>();
        const Int v = e[1].get<Int>();
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw parse_error("edge endpoint out of range: [" + std::to_string(u) + ", " + std::to_string(v) + "]");
        }
        if (u == v) {
            throw parse_error("loop at vertex " + std::to_string(u));
        }
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return g;
}

inline json to_json(const FamilyParams &p) {
    json out = json::object();
    auto put = [&](const char *key, const std::optional<Int> &v) {
        if (v) {
            out[key] = *v;
        }
    };
    put("t", p.t);
    put("d", p.d);
    put("k", p.k);
    put("ell", p.ell);
    put("n", p.n);
    return out;
}

inline json to_json(const Claim &c) {
    json out{{"kind", to_string(c.kind)}};
    if (c.value) {
        out["value"] = *c.value;
    } else {
        out["value"] = nullptr;
    }
    out["radius"] = c.radius;
    return out;
}

inline Claim claim_from_json(const json &j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw parse_error("claim must be an object with a 'kind' string");
    }
    Claim c{detail::parse_claim_kind(j.at("kind").get<std::string>()), std::nullopt, 0};
    if (j.contains("value") && !j.at("value").is_null()) {
        c.value = detail::get_int(j, "value");
    }
    if (j.contains("radius")) {
        c.radius = detail::get_int(j, "radius");
    }
    return c;
}

inline json to_json(const Construction &c) {
    json out = to_json(c.graph);
    json claims = json::array();
    for (const Claim &claim : c.claims) {
        claims.push_back(to_json(claim));
    }
    out["descriptor"] = {
        {"family", std::string(to_string(c.family))},
        {"params", to_json(c.params)},
        {"predicted_vertices", c.predicted.vertices},
        {"predicted_edges", c.predicted.edges},
        {"claims", std::move(claims)},
    };
    return out;
}

struct Descriptor {
    Family family;
    FamilyParams params;
    std::vector<Claim> claims;
};

/// Descriptor embedded in a graph document, if any. Claims stored in the
/// document are returned as written.
inline std::optional<Descriptor> descriptor_from_json(const json &j) {
    if (!j.is_object() || !j.contains("descriptor")) {
        return std::nullopt;
    }
    const json &d = j.at("descriptor");
    if (!d.is_object() || !d.contains("family") || !d.at("family").is_string()) {
        throw parse_error("descriptor must name a family");
    }
    Descriptor out{};
    try {
        out.family = parse_family(d.at("family").get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw parse_error(e.what());
    }
    if (d.contains("params")) {
        const json &p = d.at("params");
        auto get = [&](const char *key) -> std::optional<Int> {
            if (!p.contains(key)) {
                return std::nullopt;
            }
            return detail::get_int(p, key);
        };
        out.params = {get("t"), get("d"), get("k"), get("ell"), get("n")};
    }
    if (d.contains("claims")) {
        for (const json &c : d.at("claims")) {
            out.claims.push_back(claim_from_json(c));
        }
    }
    return out;
}

inline json to_json(const Colouring &c) {
    return {{"kind", to_string(c.kind)}, {"t", c.t}, {"colours", c.colours}};
}

inline Colouring colouring_from_json(const json &j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw parse_error("colouring must be an object with a 'kind' string");
    }
    Colouring c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "edge") {
        c.kind = EntityKind::edge;
    } else if (kind == "vertex") {
        c.kind = EntityKind::vertex;
    } else {
        throw parse_error("colouring kind must be 'edge' or 'vertex'");
    }
    c.t = detail::get_int(j, "t");
    if (!j.contains("colours") || !j.at("colours").is_array()) {
        throw parse_error("missing 'colours' array");
    }
    for (const json &col : j.at("colours")) {
        if (!col.is_number_integer() || col.get<Int>() < 1) {
            throw parse_error("colours must be positive integers");
        }
        c.colours.push_back(col.get<Colour>());
    }
    return c;
}

inline json to_json(const SolveReport &r) {
    return {
        {"status", to_string(r.status)},
        {"value", r.value()},
        {"lower_bound", r.lower_bound},
        {"upper_bound", r.upper_bound},
        {"clique", r.clique},
        {"colouring", to_json(r.colouring)},
        {"nodes", r.nodes},
    };
}

/// Undirected DOT; every parallel edge is its own statement and every vertex
/// is listed so isolated vertices survive.
inline void write_dot(std::ostream &os, const Multigraph &g, const std::string &name = "G") {
    os << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        os << "  " << v << ";\n";
    }
    for (const Edge &e : g.edges()) {
        os << "  " << e.u << " -- " << e.v << ";\n";
    }
    os << "}\n";
}

inline json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace distcol::io
