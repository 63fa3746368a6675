#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoperim/interval.hpp"
#include "isoperim/staircase.hpp"

namespace isoperim::bounds {

using std::int64_t;

/// Adaptive-precision policy: evaluation starts at start_bits and doubles
/// until integer brackets are unambiguous, up to max_bits.
struct PrecisionPolicy {
    mpfr_prec_t start_bits{128};
    mpfr_prec_t max_bits{1 << 15};
};

// --- real-argument expression evaluators (outward-rounded intervals) -------

/// sqrt(7/2) * sqrt(8x - 1) - 2
Interval lower_expr(const Interval& x);
/// x + 2*sqrt(7x) - 8
Interval shifted_volume_expr(const Interval& x);
/// (15/sqrt 7) sqrt(S) - (1/2) sqrt((4/7)S - (12/sqrt 7) sqrt(S) + 1)
Interval upper_full_expr(const Interval& x);
/// the simplified variant without the "+1" inside the inner root
Interval upper_simplified_expr(const Interval& x);
/// 4 a1 + 3 c - 3 - (1/2)(1 + sqrt(1 + 8(C(a1,2) - n + c a1)))
Interval relaxed_objective_expr(int64_t n, const Interval& a1, const Interval& c);

/// Domain-checked relaxed objective at an exact rational point.
Interval relaxed_objective(int64_t n, const Rational& a1, const Rational& c,
                           mpfr_prec_t bits = 192);

struct ContinuousMinimizer {
    Interval a1;
    Interval c;
    Interval value;
};

/// Closed-form unconstrained minimizer of the relaxed objective (n >= 2).
ContinuousMinimizer continuous_minimizer(int64_t n, mpfr_prec_t bits = 192);

/// ceil(sqrt(7/2) sqrt(8n-1) - 2), exactly bracketed. Valid for n >= 2;
/// certified by the bounded-set theorem only from n = 36 on.
int64_t lower_bound(int64_t n, const PrecisionPolicy& policy = {});

struct UpperBoundResult {
    int64_t value{0};
    int64_t witness_m{0};  // smallest m with 7 m^2 >= n
};

/// Exact floor of the upper-bound expression; defined iff n >= 36.
std::optional<UpperBoundResult> upper_bound(int64_t n, const PrecisionPolicy& policy = {});

struct GapReport {
    int64_t n{0};
    bool within_35_2{false};  // certified u(n) - l(n) <= 35/2
    double full_gap{0.0};     // upper-full minus lower, before integer bracketing
    std::string full_gap_str;
};

/// Real gap before integer bracketing (n >= 36). The 35/2 assertion uses the
/// simplified upper bound where it is defined (n >= 39) and the full one on
/// 36..38.
GapReport gap(int64_t n, const PrecisionPolicy& policy = {});

struct Plateau {
    int64_t start{0};
    int64_t length{0};
    int64_t value{0};
};

/// Maximal runs of consecutive volumes sharing one optimal staircase
/// perimeter, of length >= min_len, in increasing n.
std::vector<Plateau> find_plateaus(int64_t n_max, int64_t min_len);
std::vector<Plateau> find_plateaus(const std::vector<staircase::Optimum>& table,
                                   int64_t min_len);

struct BoundsRow {
    int64_t n{0};
    std::optional<int64_t> lower;      // empty for n < 2
    int64_t staircase_opt{0};
    std::optional<int64_t> exact_opt;  // filled within the exact budget
    std::optional<int64_t> upper;      // empty for n < 36
    std::optional<int64_t> witness_m;
    std::optional<int64_t> gap;        // upper - lower
    // continuous relaxation at this volume, rendered at fixed precision
    std::string relax_value;
    std::string relax_a1;
    std::string relax_c;
};

/// Per-volume report rows; exact column filled for n <= exact_cap.
std::vector<BoundsRow> make_table(int64_t from, int64_t to, int64_t exact_cap, int threads,
                                  const PrecisionPolicy& policy = {});

/// CSV: n,lower,staircase_opt,exact_opt,upper,gap (empty fields when absent).
std::string table_csv(const std::vector<BoundsRow>& rows);
std::string table_json(const std::vector<BoundsRow>& rows);

}  // namespace isoperim::bounds
