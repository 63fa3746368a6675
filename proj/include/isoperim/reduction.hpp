#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoperim/cell_set.hpp"
#include "isoperim/staircase.hpp"

namespace isoperim::reduction {

using std::int64_t;

struct TraceStep {
    std::string step;
    int64_t n_before{0};
    int64_t b_before{0};
    int64_t n_after{0};
    int64_t b_after{0};
};

/// Ordered record of normalization steps. Every recorded step must keep the
/// boundary from growing; volume may grow only in fill steps.
struct TransformTrace {
    std::vector<TraceStep> steps;

    bool boundary_nonincreasing() const;
    bool volume_rules_ok() const;  // fill steps grow volume, others preserve it
    std::string to_jsonl() const;
};

enum class SymmetryMode {
    central,  // point reflection only; free dimensions (Z^k)
    folded,   // reflection followed by half-space folds; needs radius < 2
};

struct ReflectionViolation {
    Point neighbor;
    Point image;
    std::string reason;
};

struct ReflectionReport {
    bool pass{true};
    SymmetryMode mode{SymmetryMode::central};
    Point p_star;
    int64_t neighbors_checked{0};
    std::vector<ReflectionViolation> violations;
};

/// Verifies, for the colex-greatest outer-shell point p* of A, that every
/// A-neighbor maps (reflection, or reflection+fold) to a point outside A and
/// inside the graph, injectively, and (folded mode) back into the
/// neighborhood of p*. A failure would contradict the structural guarantees
/// the pipeline relies on, so it is reported with witnesses.
ReflectionReport check_reflection_free(const CellSet& A,
                                       std::optional<SymmetryMode> mode = std::nullopt);

/// A point whose removal does not increase the edge boundary. Tries the
/// extremal point first, then the remaining cells in colex-descending order;
/// throws std::logic_error with a diagnostic if none qualifies.
Point removable_point(const CellSet& A);

// --- King-quadrant normalization pipeline -------------------------------

/// Equal-volume, connected, axis-anchored transform with non-increasing
/// boundary (unit translations toward the origin; blocked nested-arc
/// configurations are merged through a fill-and-trim round).
CellSet connect_and_anchor(const CellSet& A, TransformTrace* trace = nullptr);

/// Adds every cell of the quadrant enclosed by A's edges and the axes.
CellSet fill_bounded(const CellSet& A, TransformTrace* trace = nullptr);

/// Fills 1-gaps, then 2-gaps, lowest rows first, until none remain.
CellSet fill_gaps(const CellSet& A, TransformTrace* trace = nullptr);

/// Moves cells from the last column to the first column whose drop is >= 2,
/// until only the final drop may exceed 1.
CellSet rebalance_columns(const CellSet& A, TransformTrace* trace = nullptr);

/// Produces the constant-then-strictly-decreasing profile (volumes 1, 2 and 4
/// keep their constant profile).
CellSet normalize_shape(const CellSet& A, TransformTrace* trace = nullptr);

/// Reflects in y=x when the first column is shorter than the constant block,
/// then re-normalizes.
CellSet ensure_width_dominance(const CellSet& A, TransformTrace* trace = nullptr);

struct NormalizeResult {
    staircase::StaircaseParams params;
    TransformTrace trace;
    CellSet result;
};

/// Full pipeline; the returned params are read off the final column profile.
NormalizeResult normalize(const CellSet& A);

/// Column heights of a gap-free (Young-shaped) quadrant set.
std::vector<int64_t> column_heights_of(const CellSet& A);

}  // namespace isoperim::reduction
