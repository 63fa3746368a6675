#include "isoperim/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "isoperim/exact_solver.hpp"

namespace isoperim::bounds {

namespace {

Interval I(int64_t v, mpfr_prec_t p) { return Interval::of_int(v, p); }

}  // namespace

Interval lower_expr(const Interval& x) {
    const mpfr_prec_t p = x.prec();
    Interval eight_x = I(8, p) * x;
    return Interval::of_ratio(7, 2, p).sqrt() * (eight_x - I(1, p)).sqrt() - I(2, p);
}

Interval shifted_volume_expr(const Interval& x) {
    const mpfr_prec_t p = x.prec();
    return x + I(2, p) * (I(7, p) * x).sqrt() - I(8, p);
}

namespace {

Interval upper_expr_impl(const Interval& x, bool add_one) {
    const mpfr_prec_t p = x.prec();
    Interval s = shifted_volume_expr(x);
    Interval rs = s.sqrt();
    Interval sqrt7 = I(7, p).sqrt();
    Interval head = I(15, p) / sqrt7 * rs;
    Interval inner = Interval::of_ratio(4, 7, p) * s - I(12, p) / sqrt7 * rs;
    if (add_one) inner = inner + I(1, p);
    return head - Interval::of_ratio(1, 2, p) * inner.sqrt();
}

}  // namespace

Interval upper_full_expr(const Interval& x) { return upper_expr_impl(x, true); }
Interval upper_simplified_expr(const Interval& x) { return upper_expr_impl(x, false); }

Interval relaxed_objective_expr(int64_t n, const Interval& a1, const Interval& c) {
    const mpfr_prec_t p = a1.prec();
    // radicand = 1 + 8 (a1(a1-1)/2 - n + c a1) = 1 + 4 a1^2 - 4 a1 + 8 c a1 - 8n
    Interval radicand = I(1, p) + I(4, p) * a1 * (a1 - I(1, p)) + I(8, p) * c * a1 -
                        I(8 * n, p);
    return I(4, p) * a1 + I(3, p) * c - I(3, p) -
           Interval::of_ratio(1, 2, p) * (I(1, p) + radicand.sqrt());
}

Interval relaxed_objective(int64_t n, const Rational& a1, const Rational& c,
                           mpfr_prec_t bits) {
    if (!(Rational(1) <= a1) || !(a1 <= Rational(n)))
        throw std::domain_error("relaxed_objective: a1 outside [1, n]");
    if (c > a1) throw std::domain_error("relaxed_objective: c > a1");
    // c >= (n - a1(a1-1)/2) / a1, as exact rationals
    Rational curve = (Rational(n) - a1 * (a1 - Rational(1)) / Rational(2)) / a1;
    if (c < curve) throw std::domain_error("relaxed_objective: c below the feasible curve");
    Interval ia = Interval::of_ratio(a1.num, a1.den, bits);
    Interval ic = Interval::of_ratio(c.num, c.den, bits);
    return relaxed_objective_expr(n, ia, ic);
}

ContinuousMinimizer continuous_minimizer(int64_t n, mpfr_prec_t bits) {
    if (n < 2) throw std::invalid_argument("continuous_minimizer: n must be >= 2");
    Interval s = (I(8 * n, bits) - I(1, bits)).sqrt();  // sqrt(8n - 1)
    Interval t = I(14, bits).sqrt();
    ContinuousMinimizer m{I(3, bits) * s / (I(2, bits) * t),
                          (I(14, bits) + t * s) / I(28, bits),
                          Interval::of_ratio(7, 2, bits).sqrt() * s - I(2, bits)};
    return m;
}

int64_t lower_bound(int64_t n, const PrecisionPolicy& policy) {
    if (n < 2) throw std::invalid_argument("lower_bound: n must be >= 2");
    for (mpfr_prec_t bits = policy.start_bits; bits <= policy.max_bits; bits *= 2) {
        auto v = lower_expr(I(n, bits)).ceil_unambiguous();
        if (v) return *v;
    }
    throw std::runtime_error("lower_bound: precision cap reached without a certified ceiling");
}

std::optional<UpperBoundResult> upper_bound(int64_t n, const PrecisionPolicy& policy) {
    if (n < 36) return std::nullopt;
    UpperBoundResult r;
    r.witness_m = [&] {
        int64_t m = staircase::isqrt((n + 6) / 7);
        while (7 * m * m < n) ++m;
        return m;
    }();
    for (mpfr_prec_t bits = policy.start_bits; bits <= policy.max_bits; bits *= 2) {
        try {
            auto v = upper_full_expr(I(n, bits)).floor_unambiguous();
            if (v) {
                r.value = *v;
                return r;
            }
        } catch (const std::domain_error&) {
            // inner radicand interval still straddles zero; refine
        }
    }
    throw std::runtime_error("upper_bound: precision cap reached without a certified floor");
}

GapReport gap(int64_t n, const PrecisionPolicy& policy) {
    if (n < 36) throw std::invalid_argument("gap: defined for n >= 36");
    GapReport rep;
    rep.n = n;
    for (mpfr_prec_t bits = policy.start_bits; bits <= policy.max_bits; bits *= 2) {
        try {
            Interval x = I(n, bits);
            Interval l = lower_expr(x);
            Interval full = upper_full_expr(x) - l;
            Interval cap = Interval::of_ratio(35, 2, bits);
            Interval checked = n >= 39 ? upper_simplified_expr(x) - l : full;
            if (checked.certainly_le(cap)) {
                rep.within_35_2 = true;
            } else if (cap.certainly_lt(checked)) {
                rep.within_35_2 = false;
            } else {
                continue;  // undecided, refine
            }
            rep.full_gap = full.midpoint_double();
            rep.full_gap_str = full.midpoint_str(6);
            return rep;
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::runtime_error("gap: precision cap reached without a decision");
}

std::vector<Plateau> find_plateaus(const std::vector<staircase::Optimum>& table,
                                   int64_t min_len) {
    std::vector<Plateau> out;
    const auto n_max = static_cast<int64_t>(table.size()) - 1;
    int64_t run_start = 1;
    for (int64_t n = 2; n <= n_max + 1; ++n) {
        const bool breaks = n > n_max || table[static_cast<std::size_t>(n)].perimeter !=
                                             table[static_cast<std::size_t>(run_start)].perimeter;
        if (breaks) {
            int64_t len = n - run_start;
            if (len >= min_len)
                out.push_back(Plateau{run_start, len,
                                      table[static_cast<std::size_t>(run_start)].perimeter});
            run_start = n;
        }
    }
    return out;
}

std::vector<Plateau> find_plateaus(int64_t n_max, int64_t min_len) {
    if (n_max < 1) return {};
    return find_plateaus(staircase::optimize_table(n_max), min_len);
}

std::vector<BoundsRow> make_table(int64_t from, int64_t to, int64_t exact_cap, int threads,
                                  const PrecisionPolicy& policy) {
    if (from < 1 || from > to) throw std::invalid_argument("make_table: bad range");
    const auto count = static_cast<std::size_t>(to - from + 1);
    std::vector<BoundsRow> rows(count);

    // exact column from one exhaustive run over the smallest covering volume
    std::vector<exact::LevelResult> levels;
    const int64_t exact_to = std::min(to, exact_cap);
    if (exact_to >= from && exact_to >= 1) {
        exact::EnumerationBudget budget;
        budget.max_volume = exact_cap;
        levels = exact::solve_levels(exact_to, budget, threads);
    }

    auto fill_row = [&](std::size_t i) {
        const int64_t n = from + static_cast<int64_t>(i);
        BoundsRow& r = rows[i];
        r.n = n;
        r.staircase_opt = staircase::optimize(n).perimeter;
        if (n >= 2) r.lower = lower_bound(n, policy);
        if (auto ub = upper_bound(n, policy)) {
            r.upper = ub->value;
            r.witness_m = ub->witness_m;
            if (r.lower) r.gap = *r.upper - *r.lower;
        }
        if (n <= exact_to)
            r.exact_opt = levels[static_cast<std::size_t>(n)].min_boundary;
        if (n >= 2) {
            auto cm = continuous_minimizer(n);
            r.relax_value = cm.value.midpoint_str(6);
            r.relax_a1 = cm.a1.midpoint_str(6);
            r.relax_c = cm.c.midpoint_str(6);
        }
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fill_row(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fill_row(i);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string table_csv(const std::vector<BoundsRow>& rows) {
    std::ostringstream os;
    os << "n,lower,staircase_opt,exact_opt,upper,gap\n";
    for (const auto& r : rows) {
        os << r.n << ',';
        if (r.lower) os << *r.lower;
        os << ',' << r.staircase_opt << ',';
        if (r.exact_opt) os << *r.exact_opt;
        os << ',';
        if (r.upper) os << *r.upper;
        os << ',';
        if (r.gap) os << *r.gap;
        os << '\n';
    }
    return os.str();
}

std::string table_json(const std::vector<BoundsRow>& rows) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) os << ',';
        os << "{\"n\":" << r.n;
        if (r.lower) os << ",\"lower\":" << *r.lower;
        os << ",\"staircase_opt\":" << r.staircase_opt;
        if (r.exact_opt) os << ",\"exact_opt\":" << *r.exact_opt;
        if (r.upper) os << ",\"upper\":" << *r.upper;
        if (r.witness_m) os << ",\"witness_m\":" << *r.witness_m;
        if (r.gap) os << ",\"gap\":" << *r.gap;
        if (!r.relax_value.empty())
            os << ",\"relax_value\":" << r.relax_value << ",\"relax_a1\":" << r.relax_a1
               << ",\"relax_c\":" << r.relax_c;
        os << '}';
    }
    os << "]";
    return os.str();
}

}  // namespace isoperim::bounds
