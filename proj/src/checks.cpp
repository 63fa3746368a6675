#include "isoperim/checks.hpp"

#include <algorithm>
#include <sstream>

#include "isoperim/bounds.hpp"
#include "isoperim/exact_solver.hpp"
#include "isoperim/reduction.hpp"
#include "isoperim/staircase.hpp"

namespace isoperim::checks {

CellSet random_connected_set(const GridSpec& spec, int64_t n, std::mt19937_64& rng) {
    Point base(std::vector<Coord>(static_cast<std::size_t>(spec.dims()), 0));
    std::vector<Point> cells{base};
    while (static_cast<int64_t>(cells.size()) < n) {
        std::uniform_int_distribution<std::size_t> pick_cell(0, cells.size() - 1);
        const auto& stencil = spec.stencil();
        std::uniform_int_distribution<std::size_t> pick_off(0, stencil.size() - 1);
        Point cand = cells[pick_cell(rng)] + stencil[pick_off(rng)];
        if (!spec.in_graph(cand)) continue;
        if (std::find(cells.begin(), cells.end(), cand) != cells.end()) continue;
        cells.push_back(std::move(cand));
    }
    return CellSet(spec, std::move(cells));
}

SuiteResult check_reflection(int64_t sets_per_config, int64_t max_n, std::uint64_t seed) {
    SuiteResult res;
    std::ostringstream log;
    const std::vector<std::pair<std::string, GridSpec>> configs = {
        {"l1 on Z^2", GridSpec::l1_grid(2)},
        {"linf on Z^2", GridSpec(2, 0, NormExponent::inf(), Rational(1))},
        {"linf on N^2", GridSpec::king_quadrant()},
        {"linf on Z^1 x N^1", GridSpec(1, 1, NormExponent::inf(), Rational(1))},
    };
    std::mt19937_64 rng(seed);
    int64_t failures = 0;
    for (const auto& [name, spec] : configs) {
        int64_t checked = 0;
        for (int64_t i = 0; i < sets_per_config; ++i) {
            std::uniform_int_distribution<int64_t> pick_n(1, max_n);
            CellSet A = random_connected_set(spec, pick_n(rng), rng);
            auto rep = reduction::check_reflection_free(A);
            ++checked;
            if (!rep.pass) {
                ++failures;
                log << "  FAIL " << name << ": set of volume " << A.volume() << ", "
                    << rep.violations.size() << " violation(s), first: "
                    << rep.violations.front().reason << "\n";
            }
        }
        log << "  " << name << ": " << checked << " sets, "
            << (failures == 0 ? "all pass" : "failures above") << "\n";
    }
    res.pass = failures == 0;
    res.log = log.str();
    return res;
}

SuiteResult check_monotonicity(int64_t n_max, int threads) {
    SuiteResult res;
    auto rep = exact::verify_monotonicity(n_max, {}, threads);
    std::ostringstream log;
    log << "  minima:";
    for (int64_t n = 1; n <= n_max; ++n) log << ' ' << rep.table[static_cast<std::size_t>(n)];
    log << "\n";
    res.pass = rep.pass;
    res.log = log.str();
    return res;
}

SuiteResult check_trace(int64_t samples, int64_t max_n, std::uint64_t seed) {
    SuiteResult res;
    std::ostringstream log;
    std::mt19937_64 rng(seed);
    GridSpec quad = GridSpec::king_quadrant();
    int64_t bad = 0;
    for (int64_t i = 0; i < samples; ++i) {
        std::uniform_int_distribution<int64_t> pick_n(1, max_n);
        const int64_t n = pick_n(rng);
        CellSet A = [&] {
            if (i % 3 == 0) return random_connected_set(quad, n, rng);
            // scattered: uniform cells in a window, possibly disconnected
            std::uniform_int_distribution<Coord> coord(0, static_cast<Coord>(max_n));
            std::vector<Point> cells;
            while (static_cast<int64_t>(cells.size()) < n) {
                Point p{coord(rng), coord(rng)};
                if (std::find(cells.begin(), cells.end(), p) == cells.end())
                    cells.push_back(std::move(p));
            }
            return CellSet(quad, std::move(cells));
        }();
        auto norm = reduction::normalize(A);
        const bool ok = norm.trace.boundary_nonincreasing() && norm.trace.volume_rules_ok() &&
                        staircase::perimeter(norm.params) <= edge_boundary(A) &&
                        edge_boundary(norm.result) <= edge_boundary(A);
        if (!ok) {
            ++bad;
            log << "  FAIL on sample " << i << " (n=" << n << ")\n";
        }
    }
    log << "  " << samples << " random sets normalized, " << bad << " failure(s)\n";
    res.pass = bad == 0;
    res.log = log.str();
    return res;
}

SuiteResult check_staircase(int64_t a1_max, int64_t n_max) {
    SuiteResult res;
    std::ostringstream log;
    int64_t profiles = 0, mismatches = 0, regime_mismatches = 0;
    for (int64_t a1 = 1; a1 <= a1_max; ++a1) {
        for (int64_t c = 1; c <= a1; ++c) {
            for (int64_t k = c; k <= c + a1 - 1; ++k) {
                const int64_t hk1 = k == c ? a1 : a1 - (k - 1 - c);
                if (hk1 < 1) break;
                const int64_t ak_hi = k == c ? a1 : hk1;
                const int64_t ak_lo = k == c ? a1 : 1;
                for (int64_t ak = ak_lo; ak <= ak_hi; ++ak) {
                    staircase::StaircaseParams p{a1, c, k, ak};
                    if (!staircase::is_valid(p)) continue;
                    ++profiles;
                    auto h = staircase::column_heights(p);
                    int64_t sum = 0;
                    for (int64_t v : h) sum += v;
                    if (sum != staircase::volume(p)) {
                        ++mismatches;
                        continue;
                    }
                    const int64_t direct = staircase::young_edge_boundary(h);
                    const bool regime = staircase::perimeter_formula_regime(p);
                    if (regime && direct != staircase::perimeter(p)) {
                        ++regime_mismatches;
                        log << "  formula mismatch at " << p.str() << ": formula "
                            << staircase::perimeter(p) << " vs direct " << direct << "\n";
                    }
                }
            }
        }
    }
    int64_t objective_bad = 0;
    for (int64_t n = 1; n <= n_max; ++n) {
        for (int64_t a1 = 1; a1 <= n; ++a1) {
            for (int64_t c = 1; c <= a1; ++c) {
                auto sol = staircase::solve_k(n, a1, c);
                auto obj = staircase::objective(n, a1, c);
                if (sol.feasible != obj.has_value()) {
                    ++objective_bad;
                    continue;
                }
                if (sol.feasible && *obj != staircase::perimeter(sol.params)) ++objective_bad;
            }
        }
    }
    log << "  " << profiles << " profiles checked, " << regime_mismatches
        << " in-regime formula mismatches, " << objective_bad
        << " objective/perimeter disagreements\n";
    res.pass = mismatches == 0 && regime_mismatches == 0 && objective_bad == 0;
    res.log = log.str();
    return res;
}

SuiteResult check_bounds(int64_t from, int64_t to) {
    SuiteResult res;
    std::ostringstream log;
    int64_t bad = 0;
    auto table = staircase::optimize_table(to);
    for (int64_t n = std::max<int64_t>(from, 36); n <= to; ++n) {
        int64_t lo = bounds::lower_bound(n);
        auto ub = bounds::upper_bound(n);
        int64_t opt = table[static_cast<std::size_t>(n)].perimeter;
        if (!ub || lo > opt || opt > ub->value || ub->value - lo > 18) {
            ++bad;
            log << "  FAIL n=" << n << ": lower " << lo << ", staircase " << opt << ", upper "
                << (ub ? std::to_string(ub->value) : std::string("-")) << "\n";
        }
    }
    log << "  bracket checked on [" << std::max<int64_t>(from, 36) << ", " << to << "], " << bad
        << " failure(s)\n";
    res.pass = bad == 0;
    res.log = log.str();
    return res;
}

SuiteResult check_plateaus(int64_t n_max, int64_t min_len) {
    SuiteResult res;
    std::ostringstream log;
    auto table = staircase::optimize_table(n_max);
    auto runs = bounds::find_plateaus(table, min_len);
    // max run length over 1..N is non-decreasing in N
    int64_t prev_max = 0;
    bool monotone = true;
    for (int64_t cap = 1; cap <= n_max; cap *= 10) {
        std::vector<staircase::Optimum> prefix(
            table.begin(), table.begin() + static_cast<std::ptrdiff_t>(
                                               std::min<int64_t>(cap, n_max) + 1));
        auto rs = bounds::find_plateaus(prefix, 1);
        int64_t longest = 0;
        for (const auto& r : rs) longest = std::max(longest, r.length);
        if (longest < prev_max) monotone = false;
        prev_max = longest;
    }
    log << "  " << runs.size() << " plateau(s) of length >= " << min_len << " up to n=" << n_max
        << (runs.empty() ? "" : ", first at n=" + std::to_string(runs.front().start)) << "\n";
    res.pass = !runs.empty() && monotone;
    res.log = log.str();
    return res;
}

SuiteResult run_suite(const std::string& name, int threads) {
    if (name == "reflection") return check_reflection();
    if (name == "monotonicity") return check_monotonicity(11, threads);
    if (name == "trace") return check_trace();
    if (name == "staircase") return check_staircase();
    if (name == "bounds") return check_bounds();
    if (name == "plateaus") return check_plateaus();
    throw std::invalid_argument("unknown check suite: " + name);
}

}  // namespace isoperim::checks
