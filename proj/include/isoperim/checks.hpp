#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "isoperim/cell_set.hpp"

namespace isoperim::checks {

using std::int64_t;

struct SuiteResult {
    bool pass{false};
    std::string log;
};

/// Random king- (or lp-) connected in-graph set grown from a base point.
CellSet random_connected_set(const GridSpec& spec, int64_t n, std::mt19937_64& rng);

/// Reflection/fold verifier over random sets on the four reference graphs.
SuiteResult check_reflection(int64_t sets_per_config = 1000, int64_t max_n = 20,
                             std::uint64_t seed = 20260810);

/// Exhaustive minima are non-decreasing in the volume.
SuiteResult check_monotonicity(int64_t n_max = 11, int threads = 1);

/// Normalization traces never increase the boundary; volume rules hold.
SuiteResult check_trace(int64_t samples = 2000, int64_t max_n = 25,
                        std::uint64_t seed = 20260810);

/// Closed perimeter/volume forms against cell-level counts; the integer
/// objective against the assembled profile.
SuiteResult check_staircase(int64_t a1_max = 20, int64_t n_max = 300);

/// lower <= staircase optimum <= upper, and the integer slack cap.
SuiteResult check_bounds(int64_t from = 36, int64_t to = 2000);

/// Plateau scan sanity: nonempty at desk scale, max run length monotone.
SuiteResult check_plateaus(int64_t n_max = 2000, int64_t min_len = 3);

/// Runs the named suite ("reflection", "monotonicity", "trace", "staircase",
/// "bounds", "plateaus"); throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, int threads);

}  // namespace isoperim::checks
