#include "distcol/distcol.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace distcol;
using namespace distcol::bounds;

namespace {

// Ball sizes in the infinite d-regular tree, counted level by level.
Int vertices_around_vertex(Int radius, Int d) {
    Int total = 1, level = d;
    for (Int r = 1; r <= radius; ++r) {
        total += level;
        level *= d - 1;
    }
    return total;
}

Int vertices_around_edge(Int radius, Int d) {
    Int total = 2, level = 2 * (d - 1);
    for (Int r = 1; r <= radius; ++r) {
        total += level;
        level *= d - 1;
    }
    return total;
}

Int tau_edge_oracle(Int t, Int d) {
    // Edges hanging below a vertex ball of (t+1)/2 levels, or below a central
    // edge with t/2 levels on each side.
    return t % 2 == 1 ? vertices_around_vertex((t + 1) / 2, d) - 1 : vertices_around_edge(t / 2, d) - 1;
}

Int tau_vertex_oracle(Int t, Int d) {
    return t % 2 == 0 ? vertices_around_vertex(t / 2, d) : vertices_around_edge((t - 1) / 2, d);
}

} // namespace

TEST(Bounds, TauMatchesTreeBallOracle) {
    for (Int t = 1; t <= 9; ++t) {
        for (Int d = 3; d <= 10; ++d) {
            EXPECT_EQ(tau_edge(t, d), tau_edge_oracle(t, d)) << t << "," << d;
            EXPECT_EQ(tau_vertex(t, d), tau_vertex_oracle(t, d)) << t << "," << d;
        }
    }
}

TEST(Bounds, SmallValues) {
    EXPECT_EQ(tau_edge(1, 5), 5);
    EXPECT_EQ(tau_vertex(1, 5), 2);
    EXPECT_EQ(tau_edge(2, 4), 7);
    EXPECT_EQ(tau_vertex(2, 4), 5);
    EXPECT_EQ(tau_edge(3, 4), 16);
    EXPECT_EQ(tau_vertex(3, 4), 8);
}

TEST(Bounds, IotaIsGeometricSum) {
    for (Int d = 3; d <= 9; ++d) {
        Int sum = 0, term = 1;
        for (Int k = 0; k <= 6; ++k) {
            EXPECT_EQ(iota(k, d), sum);
            sum += term;
            term *= d - 1;
        }
    }
}

TEST(Bounds, IotaIdentities) {
    for (Int d = 3; d <= 8; ++d) {
        for (Int t = 1; t <= 7; t += 2) {
            EXPECT_EQ(d * iota((t + 1) / 2, d), tau_edge(t, d));
        }
        for (Int t = 2; t <= 8; t += 2) {
            EXPECT_EQ(1 + 2 * (d - 1) * iota(t / 2, d), tau_edge(t, d));
        }
    }
}

TEST(Bounds, RejectsBadArguments) {
    EXPECT_THROW(tau_edge(0, 4), std::invalid_argument);
    EXPECT_THROW(tau_vertex(3, 2), std::invalid_argument);
    EXPECT_THROW(iota(-1, 4), std::invalid_argument);
    EXPECT_THROW(tau_edge(200, 1000), std::overflow_error);
    EXPECT_THROW(exact_div(7, 2), std::logic_error);
}

TEST(Bounds, RecordParity) {
    const BoundsRecord r = bounds_record(3, 4);
    EXPECT_EQ(r.tau_edge, 16);
    EXPECT_EQ(r.tau_vertex, 8);
    EXPECT_EQ(r.parity, Parity::odd);
    EXPECT_EQ(bounds_record(2, 4).parity, Parity::even);
}

TEST(GirthThresholds, Values) {
    const GirthThresholds t3 = girth_thresholds(3);
    EXPECT_EQ(t3.edge_main, 84);
    EXPECT_EQ(t3.edge_tradeoff, 84);
    EXPECT_EQ(t3.vertex_main, std::nullopt);
    EXPECT_EQ(t3.edge_tradeoff_min_degree, 5);
    const GirthThresholds t5 = girth_thresholds(5);
    EXPECT_EQ(t5.edge_main, 204);
    EXPECT_EQ(t5.edge_tradeoff, 144);
    const GirthThresholds t2 = girth_thresholds(2);
    EXPECT_EQ(t2.vertex_main, 24);
    EXPECT_EQ(t2.edge_main, std::nullopt);
    EXPECT_EQ(girth_thresholds(4).vertex_main, 108);
    EXPECT_EQ(girth_thresholds(1).edge_main, std::nullopt);
    EXPECT_EQ(girth_thresholds(1).vertex_main, std::nullopt);
    EXPECT_THROW(girth_thresholds(0), std::invalid_argument);
}

TEST(GirthThresholds, ParityExclusive) {
    for (Int t = 1; t <= 12; ++t) {
        const GirthThresholds g = girth_thresholds(t);
        EXPECT_FALSE(g.edge_main && g.vertex_main);
        EXPECT_EQ(g.vertex_main.has_value(), t % 2 == 0);
        EXPECT_EQ(g.edge_main.has_value(), t % 2 == 1 && t >= 3);
    }
}

TEST(Bounds, CsvTable) {
    std::ostringstream os;
    write_bounds_csv(os, 1, 3, 3, 5);
    std::string line;
    std::istringstream in(os.str());
    std::getline(in, line);
    EXPECT_EQ(line, "t,d,tau_edge,tau_vertex,edge_main,vertex_main");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 9);
    EXPECT_NE(os.str().find("\n2,4,7,5,,24\n"), std::string::npos);
    EXPECT_NE(os.str().find("\n3,4,16,8,84,\n"), std::string::npos);
}

TEST(Validate, NamesViolatedPrecondition) {
    try {
        validate(Family::octahedron, {.d = 4});
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("d >= 6"), std::string::npos);
    }
    EXPECT_THROW(validate(Family::shannon, {.d = 5}), std::invalid_argument);
    EXPECT_THROW(validate(Family::tree_T, {.d = 3}), std::invalid_argument);
    EXPECT_THROW(validate(Family::odd_cycle_edge_cert, {.t = 3, .d = 4}), std::invalid_argument);
    EXPECT_THROW(validate(Family::odd_cycle_vertex_cert, {.t = 3, .d = 4, .ell = 4}), std::invalid_argument);
    EXPECT_THROW(validate(Family::odd_cycle_vertex_cert, {.t = 3, .d = 4, .ell = 3}), std::invalid_argument);
    EXPECT_THROW(validate(Family::cycle, {.n = 2}), std::invalid_argument);
    EXPECT_NO_THROW(validate(Family::shannon, {.d = 2}));
}

TEST(Counts, ClosedForms) {
    EXPECT_EQ(construction_counts(Family::shannon, {.d = 6}), (Counts{3, 9}));
    EXPECT_EQ(construction_counts(Family::shannon_hierarchy, {.d = 6, .k = 0}), (Counts{12, 18}));
    EXPECT_EQ(construction_counts(Family::shannon_hierarchy, {.d = 6, .k = 1}), (Counts{48, 54}));
    EXPECT_EQ(construction_counts(Family::tree_T, {.d = 3, .k = 0}), (Counts{1, 0}));
    EXPECT_EQ(construction_counts(Family::odd_cycle_edge_cert, {.t = 2, .d = 4}), (Counts{9, 9}));
    EXPECT_EQ(construction_counts(Family::odd_cycle_edge_cert, {.t = 2, .d = 5}), (Counts{20, 20}));
    EXPECT_EQ(edge_cert_cycle_length(2, 4), 3);
    EXPECT_EQ(edge_cert_cycle_length(2, 5), 5);
    EXPECT_EQ(edge_cert_cycle_length(4, 4), 13);
}

TEST(Counts, OctahedronDegreeSumCeiling) {
    // 3(d-4) pendant leaves of degree 1 and six vertices of degree at most d.
    for (Int d = 6; d <= 40; d += 2) {
        const Counts c = construction_counts(Family::octahedron, {.d = d});
        EXPECT_EQ(c.vertices, 3 * d - 6);
        EXPECT_EQ(2 * c.edges, 6 * d + 3 * (d - 4));
    }
}
