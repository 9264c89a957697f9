#pragma once

// distchroma command line: argument parsing and the six verbs.
//
// Exit codes: 0 pass, 1 claim failure, 2 usage or parse error,
// 3 inconclusive (solver budget exhausted).

#include "distcol/distcol.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace distchroma {

using distcol::Int;
using nlohmann::json;

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_inconclusive = 3 };

struct Options {
    std::optional<Int> t, d, k, ell, n;
    std::uint64_t budget = 10'000'000;
    std::string out;
    std::string format = "json";
    bool json = false;
    Int radius_shift = 0;
    std::string colouring;
    std::string kind = "edge";
    std::string target;
    Int t_min = 1, t_max = 3, d_min = 3, d_max = 5;
};

class usage_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Solver threads: hardware concurrency, capped by DISTCHROMA_THREADS.
inline unsigned solver_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("DISTCHROMA_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) {
                n = std::min<unsigned>(n, static_cast<unsigned>(cap));
            }
        } catch (const std::exception &) {
            throw usage_error(std::string("DISTCHROMA_THREADS must be a positive integer, got '") + env + "'");
        }
    }
    return n;
}

inline distcol::FamilyParams params_of(const Options &o) { return {o.t, o.d, o.k, o.ell, o.n}; }

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw usage_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline bool is_family_name(const std::string &s) {
    return std::any_of(distcol::kFamilyNames.begin(), distcol::kFamilyNames.end(),
                       [&](const auto &entry) { return entry.second == s; });
}

/// Writes to --out when given, otherwise to `out`.
inline void emit(const Options &o, std::ostream &out, const std::string &text) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw usage_error("cannot write '" + o.out + "'");
    }
    file << text;
}

struct Input {
    distcol::Multigraph graph;
    std::optional<distcol::io::Descriptor> descriptor;
    json document;
};

/// A family name (built from the flags) or a path to a graph JSON file.
inline Input load_input(const Options &o) {
    if (is_family_name(o.target)) {
        const distcol::Construction c = distcol::generate(distcol::parse_family(o.target), params_of(o));
        json doc = distcol::io::to_json(c);
        return {c.graph, distcol::io::Descriptor{c.family, c.params, c.claims}, std::move(doc)};
    }
    json doc = distcol::io::parse_json_text(read_file(o.target));
    Input in{distcol::io::graph_from_json(doc), distcol::io::descriptor_from_json(doc), doc};
    return in;
}

inline int cmd_gen(const Options &o, std::ostream &out) {
    const distcol::Construction c = distcol::generate(distcol::parse_family(o.target), params_of(o));
    emit(o, out, distcol::io::to_json(c).dump(2) + "\n");
    return exit_pass;
}

inline int cmd_bounds(const Options &o, std::ostream &out) {
    if (!o.t || !o.d) {
        throw usage_error("bounds needs --t and --d");
    }
    const distcol::bounds::BoundsRecord r = distcol::bounds::bounds_record(*o.t, *o.d);
    const distcol::bounds::GirthThresholds g = distcol::bounds::girth_thresholds(*o.t);
    auto opt = [](const std::optional<Int> &v) { return v ? json(*v) : json(nullptr); };
    if (o.json) {
        const json j{{"t", r.t},
                     {"d", r.d},
                     {"parity", distcol::bounds::to_string(r.parity)},
                     {"tau_edge", r.tau_edge},
                     {"tau_vertex", r.tau_vertex},
                     {"girth_edge_main", opt(g.edge_main)},
                     {"girth_edge_tradeoff", opt(g.edge_tradeoff)},
                     {"girth_vertex_main", opt(g.vertex_main)}};
        out << j.dump(2) << "\n";
        return exit_pass;
    }
    auto show = [](const std::optional<Int> &v) { return v ? std::to_string(*v) : std::string("none"); };
    out << "t = " << r.t << ", d = " << r.d << " (" << distcol::bounds::to_string(r.parity) << " t)\n"
        << "tau_edge   = " << r.tau_edge << "\n"
        << "tau_vertex = " << r.tau_vertex << "\n"
        << "girth threshold, edge (d >= 4):         " << show(g.edge_main) << "\n"
        << "girth threshold, edge (d >= " << g.edge_tradeoff_min_degree << "):         " << show(g.edge_tradeoff)
        << "\n"
        << "girth threshold, vertex (d >= 4):       " << show(g.vertex_main) << "\n";
    return exit_pass;
}

/// Claim checks for descriptor inputs; structure report plus girth threshold
/// applicability for bare graphs; optional colouring check for either.
inline int cmd_verify(const Options &o, std::ostream &out) {
    const Input in = load_input(o);
    distcol::SolveOptions solve{o.budget, solver_threads()};
    json report = json::object();
    std::vector<std::string> lines;
    bool failed = false;
    bool inconclusive = false;

    if (in.descriptor) {
        json claims = json::array();
        for (const distcol::Claim &raw : in.descriptor->claims) {
            const distcol::Claim c = distcol::shift_radius(raw, o.radius_shift);
            const distcol::ClaimOutcome r = distcol::check_claim(in.graph, c, solve);
            failed |= r.status == distcol::ClaimStatus::fail;
            inconclusive |= r.status == distcol::ClaimStatus::inconclusive;
            lines.push_back(std::string(distcol::to_string(r.status)) + "  " + distcol::describe(c) + "  (" + r.detail +
                            ")");
            claims.push_back({{"claim", distcol::io::to_json(c)},
                              {"status", distcol::to_string(r.status)},
                              {"detail", r.detail}});
        }
        report["family"] = std::string(distcol::to_string(in.descriptor->family));
        report["claims"] = std::move(claims);
    } else {
        const std::size_t delta = distcol::max_degree(in.graph);
        const distcol::Distance g = distcol::girth(in.graph);
        report["vertices"] = in.graph.num_vertices();
        report["edges"] = in.graph.num_edges();
        report["max_degree"] = delta;
        report["girth"] = g ? json(*g) : json(nullptr);
        lines.push_back("graph: " + std::to_string(in.graph.num_vertices()) + " vertices, " +
                        std::to_string(in.graph.num_edges()) + " edges, max degree " + std::to_string(delta) +
                        ", girth " + (g ? std::to_string(*g) : std::string("inf")));
        if (o.t) {
            const auto th = distcol::bounds::girth_thresholds(*o.t);
            const auto d = static_cast<Int>(delta);
            auto applies = [&](const std::optional<Int> &need, Int min_degree, const char *what, Int tau) {
                if (!need) {
                    return;
                }
                const bool ok = (!g || static_cast<Int>(*g) >= *need) && d >= min_degree;
                lines.push_back(std::string(what) + " threshold " + std::to_string(*need) + " (d >= " +
                                std::to_string(min_degree) + "): " +
                                (ok ? "met, bound " + std::to_string(tau) + " applies (if planar)" : "not met"));
                report[std::string(what) + "_threshold_met"] = ok;
            };
            if (d >= 3) {
                applies(th.edge_main, th.edge_main_min_degree, "edge", distcol::bounds::tau_edge(*o.t, d));
                applies(th.edge_tradeoff, th.edge_tradeoff_min_degree, "edge_tradeoff",
                        distcol::bounds::tau_edge(*o.t, d));
                applies(th.vertex_main, th.vertex_main_min_degree, "vertex", distcol::bounds::tau_vertex(*o.t, d));
            }
        }
    }

    if (!o.colouring.empty()) {
        const distcol::Colouring c =
            distcol::io::colouring_from_json(distcol::io::parse_json_text(read_file(o.colouring)));
        const distcol::ColouringCheck check = distcol::verify_distance_colouring(in.graph, c.t, c);
        failed |= !check.valid;
        std::string line = std::string(check.valid ? "pass" : "FAIL") + "  distance-" + std::to_string(c.t) + " " +
                           distcol::to_string(c.kind) + " colouring, " + std::to_string(c.palette_size()) +
                           " colours";
        if (check.conflict) {
            line += "  (conflict " + std::to_string(check.conflict->first) + ", " +
                    std::to_string(check.conflict->second) + ")";
        }
        lines.push_back(line);
        report["colouring_valid"] = check.valid;
    }

    const int code = failed ? exit_fail : (inconclusive ? exit_inconclusive : exit_pass);
    report["result"] = failed ? "fail" : (inconclusive ? "inconclusive" : "pass");
    if (o.json) {
        out << report.dump(2) << "\n";
    } else {
        for (const std::string &line : lines) {
            out << line << "\n";
        }
        out << "result: " << report["result"].get<std::string>() << "\n";
    }
    return code;
}

inline int cmd_chroma(const Options &o, std::ostream &out) {
    if (!o.t) {
        throw usage_error("chroma needs --t");
    }
    if (o.kind != "edge" && o.kind != "vertex") {
        throw usage_error("--kind must be 'edge' or 'vertex'");
    }
    const Input in = load_input(o);
    const distcol::SolveOptions solve{o.budget, solver_threads()};
    const distcol::SolveReport r = o.kind == "edge" ? distcol::distance_chromatic_index(in.graph, *o.t, solve)
                                                    : distcol::distance_chromatic_number(in.graph, *o.t, solve);
    if (o.json) {
        out << distcol::io::to_json(r).dump(2) << "\n";
    } else {
        out << (o.kind == "edge" ? "chi'_" : "chi_") << *o.t << " = ";
        if (r.status == distcol::SolveStatus::exact) {
            out << r.value();
        } else {
            out << "[" << r.lower_bound << ", " << r.upper_bound << "]";
        }
        out << "  (" << distcol::to_string(r.status) << ", clique " << r.clique.size() << ", nodes " << r.nodes
            << ")\n";
    }
    return r.status == distcol::SolveStatus::exact ? exit_pass : exit_inconclusive;
}

namespace detail {

inline std::string ratio(Int num, Int den) {
    const Int g = std::gcd(num, den);
    std::ostringstream ss;
    ss << num / g << '/' << den / g << ',' << std::fixed << std::setprecision(6)
       << static_cast<double>(num) / static_cast<double>(den);
    return ss.str();
}

} // namespace detail

inline int cmd_table(const Options &o, std::ostream &out) {
    using namespace distcol;
    std::ostringstream csv;
    if (o.target == "bounds") {
        bounds::write_bounds_csv(csv, o.t_min, o.t_max, o.d_min, o.d_max);
    } else if (o.target == "girth-thresholds") {
        const Int lo = o.t ? *o.t : o.t_min;
        const Int hi = o.t ? *o.t : o.t_max;
        csv << "t,edge_main,edge_tradeoff,edge_tradeoff_min_degree,vertex_main\n";
        for (Int t = lo; t <= hi; ++t) {
            const bounds::GirthThresholds g = bounds::girth_thresholds(t);
            auto f = [](const std::optional<Int> &v) { return v ? std::to_string(*v) : std::string(); };
            csv << t << ',' << f(g.edge_main) << ',' << f(g.edge_tradeoff) << ','
                << (g.edge_tradeoff ? std::to_string(g.edge_tradeoff_min_degree) : std::string()) << ','
                << f(g.vertex_main) << '\n';
        }
    } else if (o.target == "ratios") {
        const Int lo = o.d ? *o.d : o.d_min;
        const Int hi = o.d ? *o.d : o.d_max;
        csv << "d,family,edges,tau_edge_t,t,ratio,ratio_decimal,label\n";
        for (Int d = lo; d <= hi; ++d) {
            if (d % 2 != 0 || d < 4) {
                continue;
            }
            const Int s_edges = bounds::construction_counts(Family::shannon, {.d = d}).edges;
            csv << d << ",shannon," << s_edges << ',' << bounds::tau_edge(1, d) << ",1,"
                << detail::ratio(s_edges, bounds::tau_edge(1, d)) << ",lower-bound witness\n";
            if (d >= 6) {
                const Int o_edges = bounds::construction_counts(Family::octahedron, {.d = d}).edges;
                csv << d << ",octahedron," << o_edges << ',' << bounds::tau_edge(2, d) << ",2,"
                    << detail::ratio(o_edges, bounds::tau_edge(2, d)) << ",lower-bound witness\n";
            }
        }
    } else {
        throw usage_error("table kind must be bounds, ratios or girth-thresholds");
    }
    emit(o, out, csv.str());
    return exit_pass;
}

inline int cmd_export(const Options &o, std::ostream &out) {
    const Input in = load_input(o);
    if (o.format == "dot") {
        std::ostringstream dot;
        distcol::io::write_dot(dot, in.graph);
        emit(o, out, dot.str());
    } else if (o.format == "json") {
        json doc = distcol::io::to_json(in.graph);
        if (in.document.contains("descriptor")) {
            doc["descriptor"] = in.document.at("descriptor");
        }
        emit(o, out, doc.dump(2) + "\n");
    } else {
        throw usage_error("--format must be 'dot' or 'json'");
    }
    return exit_pass;
}

/// Parses `args` (without the program name) and runs one verb.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Distance colouring constructions, bounds and exact solver", "distchroma"};
    app.require_subcommand(1);
    Options o;

    auto family_flags = [&](CLI::App *sub) {
        sub->add_option("--t", o.t, "distance t");
        sub->add_option("--d", o.d, "maximum degree d");
        sub->add_option("--k", o.k, "hierarchy level or tree depth k");
        sub->add_option("--ell", o.ell, "cycle length");
        sub->add_option("--n", o.n, "path or cycle order");
    };
    auto budget = [&](CLI::App *sub) { sub->add_option("--budget", o.budget, "solver node budget"); };
    auto json_flag = [&](CLI::App *sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

    CLI::App *gen = app.add_subcommand("gen", "generate a construction as JSON");
    gen->add_option("family", o.target, "family name")->required();
    family_flags(gen);
    gen->add_option("--out", o.out, "output path (default stdout)");

    CLI::App *bnd = app.add_subcommand("bounds", "tree bounds and girth thresholds for one (t, d)");
    bnd->add_option("--t", o.t)->required();
    bnd->add_option("--d", o.d)->required();
    json_flag(bnd);

    CLI::App *ver = app.add_subcommand("verify", "check the claims attached to a construction or graph file");
    ver->add_option("input", o.target, "family name or graph JSON path")->required();
    family_flags(ver);
    budget(ver);
    json_flag(ver);
    ver->add_option("--radius-shift", o.radius_shift, "add to the radius of every clique claim");
    ver->add_option("--colouring", o.colouring, "colouring JSON to verify against the graph");

    CLI::App *chr = app.add_subcommand("chroma", "exact distance chromatic index or number");
    chr->add_option("input", o.target, "family name or graph JSON path")->required();
    family_flags(chr);
    chr->add_option("--kind", o.kind, "edge or vertex");
    budget(chr);
    json_flag(chr);

    CLI::App *tab = app.add_subcommand("table", "CSV tables: bounds, ratios, girth-thresholds");
    tab->add_option("kind", o.target)->required();
    tab->add_option("--t", o.t, "single t (girth-thresholds)");
    tab->add_option("--d", o.d, "single d (ratios)");
    tab->add_option("--tmin", o.t_min);
    tab->add_option("--tmax", o.t_max);
    tab->add_option("--dmin", o.d_min);
    tab->add_option("--dmax", o.d_max);
    tab->add_option("--out", o.out);

    CLI::App *exp = app.add_subcommand("export", "convert a graph to DOT or JSON");
    exp->add_option("input", o.target, "family name or graph JSON path")->required();
    family_flags(exp);
    exp->add_option("--format", o.format, "dot or json");
    exp->add_option("--out", o.out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(o, out);
        }
        if (bnd->parsed()) {
            return cmd_bounds(o, out);
        }
        if (ver->parsed()) {
            return cmd_verify(o, out);
        }
        if (chr->parsed()) {
            return cmd_chroma(o, out);
        }
        if (tab->parsed()) {
            return cmd_table(o, out);
        }
        return cmd_export(o, out);
    } catch (const usage_error &e) {
        err << "error: " << e.what() << "\n";
    } catch (const distcol::io::parse_error &e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const std::invalid_argument &e) {
        err << "invalid parameters: " << e.what() << "\n";
    } catch (const std::out_of_range &e) {
        err << "invalid parameters: " << e.what() << "\n";
    } catch (const std::overflow_error &e) {
        err << "overflow: " << e.what() << "\n";
    }
    return exit_usage;
}

} // namespace distchroma
