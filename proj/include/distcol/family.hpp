#pragma once

// Names and parameter sets of the generated graph families.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace distcol {

using Int = std::int64_t;

enum class Family {
    tree_T,
    extremal_tree_edge,
    extremal_tree_vertex,
    shannon,
    octahedron,
    shannon_hierarchy,
    octahedron_hierarchy,
    odd_cycle_edge_cert,
    odd_cycle_vertex_cert,
    path,
    cycle,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::tree_T, "tree_T"},
    {Family::extremal_tree_edge, "extremal_tree_edge"},
    {Family::extremal_tree_vertex, "extremal_tree_vertex"},
    {Family::shannon, "shannon"},
    {Family::octahedron, "octahedron"},
    {Family::shannon_hierarchy, "shannon_hierarchy"},
    {Family::octahedron_hierarchy, "octahedron_hierarchy"},
    {Family::odd_cycle_edge_cert, "odd_cycle_edge_cert"},
    {Family::odd_cycle_vertex_cert, "odd_cycle_vertex_cert"},
    {Family::path, "path"},
    {Family::cycle, "cycle"},
}};

inline std::string_view to_string(Family f) {
    for (const auto &[family, name] : kFamilyNames) {
        if (family == f) {
            return name;
        }
    }
    return "unknown";
}

inline Family parse_family(std::string_view name) {
    for (const auto &[family, n] : kFamilyNames) {
        if (n == name) {
            return family;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

/// Parameters of a family member. Unused fields stay empty.
struct FamilyParams {
    std::optional<Int> t;
    std::optional<Int> d;
    std::optional<Int> k;
    std::optional<Int> ell;
    std::optional<Int> n;

    friend bool operator==(const FamilyParams &, const FamilyParams &) = default;
};

namespace detail {

inline Int require(const std::optional<Int> &value, const char *name, Family f) {
    if (!value) {
        throw std::invalid_argument(std::string(to_string(f)) + " requires parameter " + name);
    }
    return *value;
}

inline void require_that(bool condition, Family f, const std::string &what) {
    if (!condition) {
        throw std::invalid_argument(std::string(to_string(f)) + ": precondition violated: " + what);
    }
}

} // namespace detail

} // namespace distcol
