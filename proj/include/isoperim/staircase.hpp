#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoperim/cell_set.hpp"

namespace isoperim::staircase {

using std::int64_t;

/// Column profile (a1, c, k, ak): the first c of k columns have height a1,
/// heights then drop by exactly 1 per column, and the final column has height
/// ak. Constant profiles are the k == c, ak == a1 case.
struct StaircaseParams {
    int64_t a1{1};
    int64_t c{1};
    int64_t k{1};
    int64_t ak{1};

    friend bool operator==(const StaircaseParams& x, const StaircaseParams& y) {
        return x.a1 == y.a1 && x.c == y.c && x.k == y.k && x.ak == y.ak;
    }
    std::string str() const;
};

/// Throws std::invalid_argument when the implied heights are not a valid
/// non-increasing positive profile.
void validate(const StaircaseParams& p);
bool is_valid(const StaircaseParams& p);

/// Heights h_1..h_k of the profile.
std::vector<int64_t> column_heights(const StaircaseParams& p);

/// Exact cell count; equals both the height sum and the closed form
/// (k-1)*a1 + ak - (k-c-1)(k-c)/2.
int64_t volume(const StaircaseParams& p);

/// Closed-form king-quadrant boundary 3*a1 + 2*c + k - 3.
int64_t perimeter(const StaircaseParams& p);

/// The closed form is exact when the final drop is >= 1 or the profile is
/// constant; drop-0 tails (ak == h_{k-1} with c < k) fall outside it.
bool perimeter_formula_regime(const StaircaseParams& p);

/// Cells {(t-1, 0..h_t-1)} on the king quadrant.
CellSet materialize(const StaircaseParams& p);

/// Cell-level boundary count for an arbitrary Young diagram given by
/// non-increasing column heights; independent of the closed form above.
int64_t young_edge_boundary(const std::vector<int64_t>& heights);

/// Reads (a1, c, k, ak) off a staircase-shaped height profile; nullopt when
/// the profile is not of that shape.
std::optional<StaircaseParams> params_from_heights(const std::vector<int64_t>& heights);

struct KSolution {
    bool feasible{false};
    StaircaseParams params;  // valid only when feasible
};

/// For volume n, first-column height a1 and constant-block length c, the
/// unique column count k with sum_{i=1}^{k-c-1}(a1-i) < n - c*a1 <=
/// sum_{i=1}^{k-c}(a1-i), evaluated with exact integer square roots.
/// Infeasible (a1, c) yield feasible == false.
KSolution solve_k(int64_t n, int64_t a1, int64_t c);

/// Boundary of the profile determined by (n, a1, c); equals
/// perimeter(solve_k(...)) and the closed floor form. Nullopt when infeasible.
std::optional<int64_t> objective(int64_t n, int64_t a1, int64_t c);

struct Optimum {
    StaircaseParams params;
    int64_t perimeter{0};
};

/// Exhaustive integer scan over feasible (a1, c); ties broken by smaller a1,
/// then smaller c.
Optimum optimize(int64_t n);

/// optimize(n) for n = 1..n_max (index 0 unused).
std::vector<Optimum> optimize_table(int64_t n_max);

/// Minimum cell-level boundary over all integer partitions of n realized as
/// column heights. `prune` switches on a bound-based cut (needed for large n);
/// the unpruned scan evaluates every partition.
int64_t min_boundary_over_partitions(int64_t n, bool prune);

/// CSV rows "n,a1,c,k,ak,perimeter" for n in [from, to].
std::string optimize_csv(int64_t from, int64_t to);

/// floor(sqrt(x)) for x >= 0, exact.
int64_t isqrt(int64_t x);

}  // namespace isoperim::staircase
