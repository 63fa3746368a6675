#include "isoperim/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace isoperim::staircase {

std::string StaircaseParams::str() const {
    std::ostringstream os;
    os << "(a1=" << a1 << ", c=" << c << ", k=" << k << ", ak=" << ak << ")";
    return os.str();
}

void validate(const StaircaseParams& p) {
    if (p.a1 < 1 || p.c < 1 || p.k < 1 || p.ak < 1)
        throw std::invalid_argument("staircase params must be positive: " + p.str());
    if (p.c > p.k) throw std::invalid_argument("staircase params need c <= k: " + p.str());
    if (p.k == p.c) {
        if (p.ak != p.a1)
            throw std::invalid_argument("constant profile needs ak == a1: " + p.str());
        return;
    }
    // height of column k-1 under the piecewise rule
    int64_t hk1 = p.a1 - (p.k - 1 - p.c);
    if (hk1 < 1)
        throw std::invalid_argument("staircase params imply nonpositive height: " + p.str());
    if (p.ak > hk1)
        throw std::invalid_argument("last height exceeds previous column: " + p.str());
}

bool is_valid(const StaircaseParams& p) {
    try {
        validate(p);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<int64_t> column_heights(const StaircaseParams& p) {
    validate(p);
    std::vector<int64_t> h(static_cast<std::size_t>(p.k));
    for (int64_t i = 1; i <= p.k; ++i) {
        int64_t v;
        if (i <= p.c)
            v = p.a1;
        else if (i <= p.k - 1)
            v = p.a1 - i + p.c;
        else
            v = p.ak;
        h[static_cast<std::size_t>(i - 1)] = v;
    }
    return h;
}

int64_t volume(const StaircaseParams& p) {
    validate(p);
    if (p.k == p.c) return p.k * p.a1;
    return (p.k - 1) * p.a1 + p.ak - (p.k - p.c - 1) * (p.k - p.c) / 2;
}

int64_t perimeter(const StaircaseParams& p) {
    validate(p);
    return 3 * p.a1 + 2 * p.c + p.k - 3;
}

bool perimeter_formula_regime(const StaircaseParams& p) {
    validate(p);
    if (p.k == p.c) return true;
    int64_t hk1 = p.a1 - (p.k - 1 - p.c);
    return hk1 - p.ak >= 1;
}

CellSet materialize(const StaircaseParams& p) {
    auto h = column_heights(p);
    std::vector<std::pair<Coord, Coord>> xy;
    for (std::size_t t = 0; t < h.size(); ++t)
        for (int64_t y = 0; y < h[t]; ++y) xy.emplace_back(static_cast<Coord>(t), y);
    return CellSet::quadrant(std::move(xy));
}

int64_t young_edge_boundary(const std::vector<int64_t>& heights) {
    const auto k = static_cast<int64_t>(heights.size());
    if (k == 0) throw std::invalid_argument("young_edge_boundary: empty profile");
    for (std::size_t t = 0; t + 1 < heights.size(); ++t)
        if (heights[t] < heights[t + 1])
            throw std::invalid_argument("young_edge_boundary: heights must be non-increasing");
    if (heights.back() < 1)
        throw std::invalid_argument("young_edge_boundary: heights must be positive");
    auto inside = [&](int64_t x, int64_t y) {
        return x >= 0 && y >= 0 && x < k && y < heights[static_cast<std::size_t>(x)];
    };
    static const int dx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
    static const int dy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
    int64_t count = 0;
    for (int64_t x = 0; x < k; ++x) {
        for (int64_t y = 0; y < heights[static_cast<std::size_t>(x)]; ++y) {
            for (int d = 0; d < 8; ++d) {
                int64_t vx = x + dx[d], vy = y + dy[d];
                if (vx < 0 || vy < 0) continue;  // outside the quadrant
                if (!inside(vx, vy)) ++count;
            }
        }
    }
    return count;
}

std::optional<StaircaseParams> params_from_heights(const std::vector<int64_t>& heights) {
    if (heights.empty() || heights.back() < 1) return std::nullopt;
    auto k = static_cast<int64_t>(heights.size());
    int64_t a1 = heights[0];
    int64_t c = 1;
    while (c < k && heights[static_cast<std::size_t>(c)] == a1) ++c;
    StaircaseParams p{a1, c, k, heights.back()};
    if (!is_valid(p)) return std::nullopt;
    if (column_heights(p) != heights) return std::nullopt;
    return p;
}

int64_t isqrt(int64_t x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative value");
    if (x == 0) return 0;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && static_cast<__int128>(r) * r > x) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

KSolution solve_k(int64_t n, int64_t a1, int64_t c) {
    if (n < 1 || a1 < 1 || c < 1) throw std::invalid_argument("solve_k: arguments must be >= 1");
    KSolution out;
    if (c > a1) return out;
    const int64_t remaining = n - c * a1;
    if (remaining < 0) return out;
    // radicand of the closed form; negative means the tail cannot absorb n
    const int64_t radicand = 1 + 8 * (a1 * (a1 - 1) / 2 - n + c * a1);
    if (radicand < 0) return out;
    int64_t j;  // k - c
    if (remaining == 0) {
        j = 0;
    } else {
        const int64_t q = 2 * a1 - 1;
        const int64_t f = isqrt(radicand);
        if (f * f == radicand)
            j = (q - f + 1) / 2;  // ceil((q - f)/2), q - f >= 0
        else
            j = (q - f - 1) / 2 + 1;  // ceil over the open half-integer bracket
        if (j < 1) return out;
    }
    auto tail = [&](int64_t m) { return m * a1 - m * (m + 1) / 2; };  // sum_{i=1}^{m}(a1-i)
    if (j > 0) {
        // sandwich that defines k
        if (!(tail(j - 1) < remaining && remaining <= tail(j))) return out;
    }
    StaircaseParams p;
    p.a1 = a1;
    p.c = c;
    p.k = c + j;
    p.ak = (j == 0) ? a1 : remaining - tail(j - 1);
    if (!is_valid(p)) return out;
    if (volume(p) != n) return out;
    out.feasible = true;
    out.params = p;
    return out;
}

std::optional<int64_t> objective(int64_t n, int64_t a1, int64_t c) {
    KSolution s = solve_k(n, a1, c);
    if (!s.feasible) return std::nullopt;
    const int64_t radicand = 1 + 8 * (a1 * (a1 - 1) / 2 - n + c * a1);
    // floor((1+sqrt(radicand))/2) == (1 + isqrt(radicand)) / 2 for all
    // nonnegative radicands, perfect square or not.
    const int64_t value = 4 * a1 + 3 * c - 3 - (1 + isqrt(radicand)) / 2;
    return value;
}

Optimum optimize(int64_t n) {
    if (n < 1) throw std::invalid_argument("optimize: n must be >= 1");
    Optimum best;
    bool have = false;
    for (int64_t a1 = 1; a1 <= n; ++a1) {
        if (have && 3 * a1 >= best.perimeter) break;  // perimeter >= 3*a1 always
        int64_t c_lo = 1;
        {
            const int64_t spare = n - a1 * (a1 - 1) / 2;
            if (spare > 0) c_lo = std::max<int64_t>(1, (spare + a1 - 1) / a1);
        }
        for (int64_t c = c_lo; c <= a1; ++c) {
            if (have && 3 * a1 + 2 * c - 2 > best.perimeter) break;  // k >= 1
            KSolution s = solve_k(n, a1, c);
            if (!s.feasible) continue;
            int64_t per = perimeter(s.params);
            if (!have || per < best.perimeter) {
                best.params = s.params;
                best.perimeter = per;
                have = true;
            }
        }
    }
    if (!have) throw std::logic_error("optimize: no feasible staircase found");
    return best;
}

std::vector<Optimum> optimize_table(int64_t n_max) {
    std::vector<Optimum> t(static_cast<std::size_t>(n_max + 1));
    for (int64_t n = 1; n <= n_max; ++n) t[static_cast<std::size_t>(n)] = optimize(n);
    return t;
}

namespace {

// Recursive partition scan. `heights` is the non-increasing prefix,
// `remaining` the cells still to place. With prune == true, subtrees whose
// boundary lower bound already exceeds `best` are cut; the bound relies on
// the direction-count identity validated in the tests against the cell-level
// counter.
void scan_partitions(std::vector<int64_t>& heights, int64_t remaining, bool prune,
                     int64_t& best) {
    if (remaining == 0) {
        best = std::min(best, young_edge_boundary(heights));
        return;
    }
    const int64_t cap = heights.empty() ? remaining : std::min(remaining, heights.back());
    for (int64_t h = cap; h >= 1; --h) {
        if (prune && !heights.empty()) {
            // Final boundary is 2*h1 + 2*k + h_k - 2 + sum f(drop), f >= 0,
            // with k >= current_k + ceil(remaining/h) and h_k >= 1.
            int64_t k_min = static_cast<int64_t>(heights.size()) + (remaining + h - 1) / h;
            int64_t fixed = 0;
            for (std::size_t t = 0; t + 1 < heights.size(); ++t) {
                int64_t d = heights[t] - heights[t + 1];
                fixed += (d == 0) ? 1 : d - 1;
            }
            if (2 * heights[0] + 2 * k_min - 1 + fixed >= best) {
                // bound is monotone as h shrinks (k_min grows); cut the rest
                break;
            }
        }
        heights.push_back(h);
        scan_partitions(heights, remaining - h, prune, best);
        heights.pop_back();
    }
}

}  // namespace

int64_t min_boundary_over_partitions(int64_t n, bool prune) {
    if (n < 1) throw std::invalid_argument("min_boundary_over_partitions: n must be >= 1");
    int64_t best = std::numeric_limits<int64_t>::max();
    if (prune) {
        // Seed with an achieved value (cell-level count of the scan's own
        // best-known profile) so cuts kick in early; cuts at bound >= best
        // can only discard non-improving subtrees.
        best = young_edge_boundary(column_heights(optimize(n).params));
    }
    std::vector<int64_t> heights;
    heights.reserve(static_cast<std::size_t>(n));
    scan_partitions(heights, n, prune, best);
    return best;
}

std::string optimize_csv(int64_t from, int64_t to) {
    if (from < 1 || from > to) throw std::invalid_argument("optimize_csv: bad range");
    std::ostringstream os;
    os << "n,a1,c,k,ak,perimeter\n";
    for (int64_t n = from; n <= to; ++n) {
        Optimum o = optimize(n);
        os << n << ',' << o.params.a1 << ',' << o.params.c << ',' << o.params.k << ','
           << o.params.ak << ',' << o.perimeter << '\n';
    }
    return os.str();
}

}  // namespace isoperim::staircase
