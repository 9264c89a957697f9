#pragma once

// Exact chromatic number by DSATUR branch and bound, and the distance
// chromatic index/number built on top of it.
//
// The search is sequential and fully deterministic. Only the greedy clique
// heuristic (one independent run per seed vertex) is spread over threads,
// and its result is reduced in seed order, so reports never depend on the
// thread count.

#include "distcol/colouring.hpp"
#include "distcol/graph.hpp"
#include "distcol/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

namespace distcol {

struct SolveOptions {
    std::uint64_t node_budget = 10'000'000;
    unsigned threads = 1;
};

enum class SolveStatus { exact, bounds_only };

inline const char *to_string(SolveStatus s) { return s == SolveStatus::exact ? "exact" : "bounds-only"; }

struct SolveReport {
    SolveStatus status = SolveStatus::exact;
    std::size_t lower_bound = 0;
    std::size_t upper_bound = 0;
    std::vector<VertexId> clique; // lower-bound witness
    Colouring colouring;          // upper-bound witness
    std::uint64_t nodes = 0;

    /// The chromatic number when exact, otherwise the best upper bound.
    std::size_t value() const { return upper_bound; }

    friend bool operator==(const SolveReport &, const SolveReport &) = default;
};

namespace detail {

inline std::vector<VertexId> clique_from_seed(const SimpleGraph &g, VertexId seed, std::vector<std::size_t> &stamp,
                                              std::size_t &epoch) {
    std::vector<VertexId> clique{seed};
    auto nb = g.neighbours(seed);
    std::vector<VertexId> candidates(nb.begin(), nb.end());
    std::vector<VertexId> next;
    while (!candidates.empty()) {
        ++epoch;
        for (VertexId v : candidates) {
            stamp[v] = epoch;
        }
        VertexId best = candidates.front();
        std::size_t best_score = 0;
        bool first = true;
        for (VertexId v : candidates) {
            std::size_t score = 0;
            for (VertexId w : g.neighbours(v)) {
                score += stamp[w] == epoch ? 1 : 0;
            }
            if (first || score > best_score) {
                best = v;
                best_score = score;
                first = false;
            }
        }
        clique.push_back(best);
        auto bn = g.neighbours(best);
        next.clear();
        std::set_intersection(candidates.begin(), candidates.end(), bn.begin(), bn.end(), std::back_inserter(next));
        std::swap(candidates, next);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

} // namespace detail

/// Largest clique found by growing greedily from every seed vertex (always
/// adding the candidate with most candidate neighbours, lowest id on ties).
/// Ties between seeds go to the lowest seed.
inline std::vector<VertexId> greedy_clique(const SimpleGraph &g, unsigned threads = 1) {
    const std::size_t n = g.num_vertices();
    if (n == 0) {
        return {};
    }
    if (is_clique(g)) {
        std::vector<VertexId> all(n);
        for (VertexId v = 0; v < n; ++v) {
            all[v] = v;
        }
        return all;
    }
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, n / 64));
    std::vector<std::size_t> size_from(n, 0);
    auto run = [&](std::size_t w) {
        std::vector<std::size_t> stamp(n, 0);
        std::size_t epoch = 0;
        for (VertexId seed = w; seed < n; seed += workers) {
            size_from[seed] = detail::clique_from_seed(g, seed, stamp, epoch).size();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
    }
    const auto seed = static_cast<VertexId>(std::max_element(size_from.begin(), size_from.end()) - size_from.begin());
    std::vector<std::size_t> stamp(n, 0);
    std::size_t epoch = 0;
    return detail::clique_from_seed(g, seed, stamp, epoch);
}

namespace detail {

/// Incremental DSATUR bookkeeping: per-vertex neighbour colour counts,
/// saturation and uncoloured degree.
class DsaturState {
  public:
    DsaturState(const SimpleGraph &g, std::size_t max_colour)
        : g_(g), stride_(max_colour + 1), count_(g.num_vertices() * stride_, 0), sat_(g.num_vertices(), 0),
          free_degree_(g.num_vertices()), colour_(g.num_vertices(), 0) {
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            free_degree_[v] = g.degree(v);
        }
    }

    void assign(VertexId v, Colour c) {
        colour_[v] = c;
        for (VertexId w : g_.neighbours(v)) {
            --free_degree_[w];
            if (count_[w * stride_ + c]++ == 0) {
                ++sat_[w];
            }
        }
    }

    void unassign(VertexId v) {
        const Colour c = colour_[v];
        colour_[v] = 0;
        for (VertexId w : g_.neighbours(v)) {
            ++free_degree_[w];
            if (--count_[w * stride_ + c] == 0) {
                --sat_[w];
            }
        }
    }

    bool allowed(VertexId v, Colour c) const { return count_[v * stride_ + c] == 0; }

    /// Highest saturation, then highest uncoloured degree, then lowest id.
    VertexId select() const {
        VertexId best = g_.num_vertices();
        for (VertexId v = 0; v < g_.num_vertices(); ++v) {
            if (colour_[v] != 0) {
                continue;
            }
            if (best == g_.num_vertices() || sat_[v] > sat_[best] ||
                (sat_[v] == sat_[best] && free_degree_[v] > free_degree_[best])) {
                best = v;
            }
        }
        return best;
    }

    const std::vector<Colour> &colours() const { return colour_; }

  private:
    const SimpleGraph &g_;
    std::size_t stride_;
    std::vector<std::uint32_t> count_;
    std::vector<std::size_t> sat_;
    std::vector<std::size_t> free_degree_;
    std::vector<Colour> colour_;
};

inline std::vector<Colour> dsatur_greedy(const SimpleGraph &g) {
    const std::size_t limit = max_degree(g) + 1;
    DsaturState state(g, limit);
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        const VertexId v = state.select();
        Colour c = 1;
        while (!state.allowed(v, c)) {
            ++c;
        }
        state.assign(v, c);
    }
    return state.colours();
}

/// Classes of true twins (equal closed neighbourhoods), each sorted by id.
/// Only classes with at least two members are returned.
inline std::vector<std::vector<VertexId>> twin_classes(const SimpleGraph &g) {
    std::map<std::vector<VertexId>, std::vector<VertexId>> by_ball;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto nb = g.neighbours(v);
        std::vector<VertexId> ball(nb.begin(), nb.end());
        ball.insert(std::lower_bound(ball.begin(), ball.end(), v), v);
        by_ball[std::move(ball)].push_back(v);
    }
    std::vector<std::vector<VertexId>> out;
    for (auto &[ball, members] : by_ball) {
        if (members.size() > 1) {
            out.push_back(std::move(members));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

class BranchAndBound {
  public:
    BranchAndBound(const SimpleGraph &g, std::size_t upper, std::uint64_t budget)
        : g_(g), state_(g, upper), ub_(upper), budget_(budget), twin_of_(g.num_vertices(), kNoClass) {
        twins_ = twin_classes(g);
        for (std::size_t i = 0; i < twins_.size(); ++i) {
            for (VertexId v : twins_[i]) {
                twin_of_[v] = i;
            }
        }
    }

    /// Returns true if the search finished within budget.
    bool run(const std::vector<VertexId> &clique, std::size_t lb) {
        lb_ = lb;
        for (std::size_t i = 0; i < clique.size(); ++i) {
            state_.assign(clique[i], static_cast<Colour>(i + 1));
        }
        search(clique.size(), clique.size());
        return !aborted_;
    }

    std::size_t upper_bound() const { return ub_; }
    const std::vector<Colour> &best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    void search(std::size_t coloured, std::size_t used) {
        if (nodes_ >= budget_) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        if (coloured == g_.num_vertices()) {
            ub_ = used;
            best_ = state_.colours();
            return;
        }
        const VertexId v = state_.select();
        // Twins are interchangeable: each takes a colour above its coloured twins.
        Colour floor = 0;
        if (twin_of_[v] != kNoClass) {
            for (VertexId w : twins_[twin_of_[v]]) {
                floor = std::max(floor, state_.colours()[w]);
            }
        }
        for (Colour c = floor + 1; c <= std::min(used + 1, ub_ - 1); ++c) {
            if (!state_.allowed(v, c)) {
                continue;
            }
            state_.assign(v, c);
            search(coloured + 1, std::max<std::size_t>(used, c));
            state_.unassign(v);
            if (aborted_ || ub_ <= lb_) {
                return;
            }
        }
    }

    static constexpr std::size_t kNoClass = static_cast<std::size_t>(-1);

    const SimpleGraph &g_;
    DsaturState state_;
    std::size_t ub_;
    std::size_t lb_ = 0;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<Colour> best_;
    std::vector<std::vector<VertexId>> twins_;
    std::vector<std::size_t> twin_of_;
};

} // namespace detail

/// Chromatic number of g. Starts from a greedy clique (lower bound) and a
/// DSATUR colouring (upper bound); if they differ, runs DSATUR branch and
/// bound with the clique precoloured, trying colours in ascending order with
/// at most one fresh colour per node. Running out of node budget yields
/// SolveStatus::bounds_only. Members of a class of true twins are coloured
/// in increasing colour order; the greedy clique is maximal, so it contains
/// every twin class it meets in full and the two symmetry reductions agree.
inline SolveReport exact_chromatic_number(const SimpleGraph &g, const SolveOptions &options = {}) {
    SolveReport report;
    report.colouring = {EntityKind::vertex, 1, {}};
    if (g.num_vertices() == 0) {
        return report;
    }
    report.clique = greedy_clique(g, options.threads);
    report.lower_bound = report.clique.size();
    std::vector<Colour> best = detail::dsatur_greedy(g);
    report.upper_bound = *std::max_element(best.begin(), best.end());

    if (report.lower_bound < report.upper_bound) {
        detail::BranchAndBound search(g, report.upper_bound, options.node_budget);
        const bool finished = search.run(report.clique, report.lower_bound);
        report.nodes = search.nodes();
        if (search.upper_bound() < report.upper_bound) {
            report.upper_bound = search.upper_bound();
            best = search.best();
        }
        if (finished) {
            report.lower_bound = report.upper_bound;
        } else {
            report.status = SolveStatus::bounds_only;
        }
    }
    report.colouring.colours = std::move(best);
    return report;
}

/// chi(L(G)^t): the witnesses are edge ids of g.
inline SolveReport distance_chromatic_index(const Multigraph &g, Int t, const SolveOptions &options = {}) {
    SolveReport r = exact_chromatic_number(power(line_graph(g), static_cast<std::size_t>(t)), options);
    r.colouring.kind = EntityKind::edge;
    r.colouring.t = t;
    return r;
}

/// chi(G^t).
inline SolveReport distance_chromatic_number(const Multigraph &g, Int t, const SolveOptions &options = {}) {
    SolveReport r = exact_chromatic_number(power(underlying_simple(g), static_cast<std::size_t>(t)), options);
    r.colouring.kind = EntityKind::vertex;
    r.colouring.t = t;
    return r;
}

} // namespace distcol
