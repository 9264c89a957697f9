#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using distchroma::json;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = distchroma::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / "distchroma_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::size_t count(const std::string &text, const std::string &needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

} // namespace

TEST(Cli, GenShannon) {
    const Invocation r = run({"gen", "shannon", "--d", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("n"), 3);
    EXPECT_EQ(j.at("edges").size(), 9u);
    EXPECT_EQ(j.at("descriptor").at("family"), "shannon");
}

TEST(Cli, GenSmallExamples) {
    EXPECT_EQ(json::parse(run({"gen", "tree_T", "--k", "0", "--d", "3"}).out).at("n"), 1);
    EXPECT_EQ(json::parse(run({"gen", "odd_cycle_edge_cert", "--t", "2", "--d", "4"}).out).at("edges").size(), 9u);
}

TEST(Cli, GenRejectsBadParameters) {
    const Invocation r = run({"gen", "octahedron", "--d", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("d >= 6"), std::string::npos);
    EXPECT_EQ(run({"gen", "nonsense"}).code, 2);
    EXPECT_EQ(run({"gen", "shannon", "--d", "x"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"gen", "shannon"}).code, 2);
}

TEST(Cli, GenWritesFile) {
    const fs::path out = scratch("s4.json");
    ASSERT_EQ(run({"gen", "shannon", "--d", "4", "--out", out.string()}).code, 0);
    std::ifstream in(out);
    EXPECT_EQ(json::parse(in).at("edges").size(), 6u);
}

TEST(Cli, Bounds) {
    const Invocation r = run({"bounds", "--t", "3", "--d", "4", "--json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("tau_edge"), 16);
    EXPECT_EQ(j.at("tau_vertex"), 8);
    EXPECT_EQ(j.at("girth_edge_main"), 84);
    EXPECT_TRUE(j.at("girth_vertex_main").is_null());
    EXPECT_EQ(run({"bounds", "--t", "0", "--d", "4"}).code, 2);
}

TEST(Cli, VerifyOctahedronPasses) {
    const Invocation r = run({"verify", "octahedron", "--d", "6"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(count(r.out, "FAIL"), 0u);
}

TEST(Cli, VerifyRadiusShiftFails) {
    const Invocation r = run({"verify", "shannon", "--d", "6", "--radius-shift", "-1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL  line_power_clique radius=0"), std::string::npos);
}

TEST(Cli, VerifyEdgeCertificateReportsSolverBounds) {
    const Invocation r = run({"verify", "odd_cycle_edge_cert", "--t", "2", "--d", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("chi'_2 in [9, 9]"), std::string::npos);
    EXPECT_NE(r.out.find("threshold=7"), std::string::npos);
}

TEST(Cli, VerifyInconclusiveOnTinyBudget) {
    const Invocation r = run({"verify", "odd_cycle_edge_cert", "--t", "2", "--d", "6", "--budget", "2"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("inconclusive"), std::string::npos);
}

TEST(Cli, VerifyGraphFileWithColouring) {
    const fs::path g = scratch("p5.json");
    {
        std::ofstream(g) << R"({"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4]]})";
    }
    const fs::path good = scratch("good.json");
    {
        std::ofstream(good) << R"({"kind": "edge", "t": 3, "colours": [1,2,3,4]})";
    }
    const fs::path bad = scratch("bad.json");
    {
        std::ofstream(bad) << R"({"kind": "edge", "t": 3, "colours": [1,2,3,1]})";
    }
    const Invocation ok = run({"verify", g.string(), "--colouring", good.string(), "--t", "3"});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_NE(ok.out.find("girth inf"), std::string::npos);
    const Invocation no = run({"verify", g.string(), "--colouring", bad.string(), "--json"});
    EXPECT_EQ(no.code, 1);
    EXPECT_FALSE(json::parse(no.out).at("colouring_valid").get<bool>());
}

TEST(Cli, VerifyBareGraphReportsThresholds) {
    const fs::path g = scratch("c100.json");
    {
        json j{{"n", 100}, {"edges", json::array()}};
        for (int i = 0; i < 100; ++i) {
            j["edges"].push_back({i, (i + 1) % 100});
        }
        std::ofstream(g) << j.dump();
    }
    const Invocation r = run({"verify", g.string(), "--t", "2", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("girth"), 100);
    EXPECT_EQ(j.at("max_degree"), 2);
}

TEST(Cli, ParseErrorsExitTwo) {
    const fs::path g = scratch("broken.json");
    {
        std::ofstream(g) << "{\"n\": 3, \"edges\": [[0, 9]]}";
    }
    EXPECT_EQ(run({"verify", g.string()}).code, 2);
    EXPECT_EQ(run({"chroma", g.string(), "--t", "1"}).code, 2);
    EXPECT_EQ(run({"export", (scratch("missing.json")).string()}).code, 2);
    EXPECT_EQ(run({"chroma", "path", "--n", "4", "--t", "1", "--kind", "face"}).code, 2);
}

TEST(Cli, ChromaExamples) {
    EXPECT_NE(run({"chroma", "path", "--n", "5", "--t", "3"}).out.find("chi'_3 = 4"), std::string::npos);
    EXPECT_NE(run({"chroma", "cycle", "--n", "5", "--t", "1", "--kind", "vertex"}).out.find("chi_1 = 3"),
              std::string::npos);
    const Invocation r = run({"chroma", "extremal_tree_edge", "--t", "3", "--d", "4", "--json"});
    EXPECT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("value"), 16);
    EXPECT_EQ(j.at("status"), "exact");
    EXPECT_EQ(run({"chroma", "odd_cycle_edge_cert", "--t", "2", "--d", "6", "--budget", "2"}).code, 3);
}

TEST(Cli, Tables) {
    const Invocation b = run({"table", "bounds", "--tmin", "1", "--tmax", "3", "--dmin", "3", "--dmax", "5"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(count(b.out, "\n"), 10u);
    const Invocation g = run({"table", "girth-thresholds", "--t", "3"});
    EXPECT_NE(g.out.find("\n3,84,84,5,\n"), std::string::npos);
    const Invocation r = run({"table", "ratios", "--d", "100"});
    EXPECT_NE(r.out.find("100,shannon,150,100,1,3/2,1.500000,lower-bound witness"), std::string::npos);
    EXPECT_NE(r.out.find("100,octahedron,444,199,2,444/199,2.231156,lower-bound witness"), std::string::npos);
    EXPECT_EQ(run({"table", "colours"}).code, 2);
}

TEST(Cli, ExportDotAndJson) {
    const fs::path src = scratch("s4src.json");
    ASSERT_EQ(run({"gen", "shannon", "--d", "4", "--out", src.string()}).code, 0);
    const Invocation dot = run({"export", src.string(), "--format", "dot"});
    EXPECT_EQ(count(dot.out, " -- "), 6u);
    const Invocation back = run({"export", src.string(), "--format", "json"});
    std::ifstream in(src);
    EXPECT_EQ(json::parse(back.out), json::parse(in));
    EXPECT_EQ(run({"export", src.string(), "--format", "svg"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"gen", "octahedron_hierarchy", "--k", "1", "--d", "6"},
          std::vector<std::string>{"verify", "odd_cycle_vertex_cert", "--t", "3", "--d", "4", "--ell", "7", "--json"},
          std::vector<std::string>{"chroma", "odd_cycle_edge_cert", "--t", "2", "--d", "5", "--json"},
          std::vector<std::string>{"table", "ratios", "--dmin", "4", "--dmax", "20"}}) {
        const Invocation a = run(args);
        ::setenv("DISTCHROMA_THREADS", "1", 1);
        const Invocation b = run(args);
        ::unsetenv("DISTCHROMA_THREADS");
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, b.code);
    }
}

TEST(Cli, BadThreadVariable) {
    ::setenv("DISTCHROMA_THREADS", "many", 1);
    EXPECT_EQ(run({"chroma", "path", "--n", "4", "--t", "1"}).code, 2);
    ::unsetenv("DISTCHROMA_THREADS");
}

TEST(Cli, VerifyConstructionMatrix) {
    // Families x t <= 4 x d <= 6 x k <= 1. The t = 4 edge certificates with
    // d >= 4 need a parity argument around a 13-, 21- or 31-cycle that the
    // branch and bound cannot finish within the default budget; they must
    // come back inconclusive, never failed.
    std::vector<std::vector<std::string>> members;
    auto add = [&](std::vector<std::string> args) { members.push_back(std::move(args)); };
    for (int d = 3; d <= 6; ++d) {
        const std::string ds = std::to_string(d);
        for (int t = 1; t <= 4; ++t) {
            add({"extremal_tree_edge", "--t", std::to_string(t), "--d", ds});
            add({"extremal_tree_vertex", "--t", std::to_string(t), "--d", ds});
        }
        for (int k = 0; k <= 1; ++k) {
            add({"tree_T", "--k", std::to_string(k), "--d", ds});
        }
        for (int t : {2, 4}) {
            add({"odd_cycle_edge_cert", "--t", std::to_string(t), "--d", ds});
        }
        for (int t : {1, 3}) {
            for (int ell : {t + 2, t + 4}) {
                add({"odd_cycle_vertex_cert", "--t", std::to_string(t), "--d", ds, "--ell", std::to_string(ell)});
            }
        }
    }
    for (const char *d : {"2", "4", "6"}) {
        add({"shannon", "--d", d});
    }
    add({"octahedron", "--d", "6"});
    for (const char *k : {"0", "1"}) {
        add({"shannon_hierarchy", "--k", k, "--d", "4"});
        add({"shannon_hierarchy", "--k", k, "--d", "6"});
        add({"octahedron_hierarchy", "--k", k, "--d", "6"});
    }
    for (int n = 1; n <= 6; ++n) {
        add({"path", "--n", std::to_string(n)});
        if (n >= 3) {
            add({"cycle", "--n", std::to_string(n)});
        }
    }
    for (std::vector<std::string> args : members) {
        const bool hard = args[0] == "odd_cycle_edge_cert" && args[2] == "4" && args[4] != "3";
        args.insert(args.begin(), "verify");
        const Invocation r = run(args);
        EXPECT_EQ(r.code, hard ? 3 : 0) << args[1] << " " << r.out << r.err;
        EXPECT_EQ(count(r.out, "FAIL"), 0u) << args[1];
    }
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
