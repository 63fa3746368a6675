#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoperim/cell_set.hpp"

namespace isoperim::exact {

using std::int64_t;

/// Limits for the exhaustive search. The board encoding caps max_volume at 14;
/// requests beyond the budget raise BudgetExceeded rather than returning a
/// silent partial answer.
///
/// prune_bound discards partial sets that provably cannot stay at or below
/// the given boundary: every superset has boundary >= #rows + #columns +
/// #(x-y) diagonals, and those counts never shrink as cells are added. The
/// reported minima and witnesses are exact only when prune_bound >= the true
/// optimum; counts then cover the surviving sets only. Oracle runs leave it
/// off.
struct EnumerationBudget {
    int64_t max_volume{11};
    bool canonicalize{true};  // dedup under the y=x reflection
    std::optional<int64_t> prune_bound;
    int64_t max_optima_stored{1000000};
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Packed canonical form of an anchored set (cells sorted colex, one byte
/// (y<<4)|x per cell, big-endian). Total order matches lexicographic
/// comparison of colex-sorted cell lists.
struct Key128 {
    std::uint64_t hi{0}, lo{0};
    friend bool operator==(const Key128& a, const Key128& b) {
        return a.hi == b.hi && a.lo == b.lo;
    }
    friend bool operator<(const Key128& a, const Key128& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

std::vector<std::pair<int, int>> key_cells(const Key128& key, int64_t n);
Key128 cells_key(const std::vector<std::pair<int, int>>& cells);
Key128 reflect_key(const Key128& key, int64_t n);

struct LevelResult {
    int64_t volume{0};
    int64_t canonical_count{0};  // connected anchored sets, one per reflection class
    int64_t raw_count{0};        // without the reflection dedup
    int64_t min_boundary{0};
    int64_t optima_count{0};     // canonical optima
    bool optima_overflow{false};
    std::vector<Key128> optima;  // canonical reps attaining min_boundary, sorted
    std::vector<std::pair<int, int>> witness_cells;  // colex-least canonical optimum
};

/// One exhaustive traversal; results for every volume 1..n_max.
std::vector<LevelResult> solve_levels(int64_t n_max, const EnumerationBudget& budget = {},
                                      int threads = 1);

/// Streams every king-connected n-cell subset of N^2 touching both axes,
/// exactly once per y=x-reflection class (or every anchored set when the
/// budget disables canonicalization).
void enumerate_connected(int64_t n, const std::function<void(const CellSet&)>& visit,
                         const EnumerationBudget& budget = {});

struct OptimumResult {
    int64_t n{0};
    int64_t min_boundary{0};
    CellSet witness;
    int64_t optima_count{0};
    bool optima_overflow{false};
};

OptimumResult optimum(int64_t n, const EnumerationBudget& budget = {}, int threads = 1);

struct MonotonicityReport {
    bool pass{false};
    std::vector<int64_t> table;  // table[n] = min boundary, 1-based
};

MonotonicityReport verify_monotonicity(int64_t n_max, const EnumerationBudget& budget = {},
                                       int threads = 1);

struct ChainReport {
    bool exists{false};
    std::vector<CellSet> chain;  // one optimal set per volume when exists
    int64_t break_volume{0};     // first volume whose optima extend no chain
    std::string note;
};

/// Decides whether optimal sets can be nested A_1 c A_2 c ... c A_{n_max}.
ChainReport nested_chain_exists(int64_t n_max, const EnumerationBudget& budget = {},
                                int threads = 1);

/// Same decision over an already computed run (the optima sets are reused).
ChainReport nested_chain_from_levels(const std::vector<LevelResult>& levels);

/// Minimum boundary over all integer partitions of n realized as column
/// heights (the bounded gap-free shapes).
int64_t optimum_partition_shaped(int64_t n);

/// "exact" CSV: n,min_boundary,optima_count,witness
std::string exact_csv(const std::vector<LevelResult>& levels);

}  // namespace isoperim::exact
