#include "isoperim/exact_solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "isoperim/staircase.hpp"

namespace isoperim::exact {

namespace {

constexpr int kMaxVolume = 14;  // board nibbles hold coordinates 0..13 (+1 for neighbours)

// ---------------------------------------------------------------------------
// 16x16 bitboard over the anchored quadrant window; bit index = y*16 + x.
// ---------------------------------------------------------------------------

struct Board {
    std::uint64_t w[4]{0, 0, 0, 0};
};

inline Board operator&(const Board& a, const Board& b) {
    Board r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
}

inline Board andnot(const Board& a, const Board& b) {  // a & ~b
    Board r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] & ~b.w[i];
    return r;
}

inline Board shl(const Board& b, int s) {
    Board r;
    r.w[3] = (b.w[3] << s) | (b.w[2] >> (64 - s));
    r.w[2] = (b.w[2] << s) | (b.w[1] >> (64 - s));
    r.w[1] = (b.w[1] << s) | (b.w[0] >> (64 - s));
    r.w[0] = b.w[0] << s;
    return r;
}

inline Board shr(const Board& b, int s) {
    Board r;
    r.w[0] = (b.w[0] >> s) | (b.w[1] << (64 - s));
    r.w[1] = (b.w[1] >> s) | (b.w[2] << (64 - s));
    r.w[2] = (b.w[2] >> s) | (b.w[3] << (64 - s));
    r.w[3] = b.w[3] >> s;
    return r;
}

inline int popcount(const Board& b) {
    return std::popcount(b.w[0]) + std::popcount(b.w[1]) + std::popcount(b.w[2]) +
           std::popcount(b.w[3]);
}

struct Masks {
    Board not_col0;   // cells with x > 0
    Board not_col15;  // cells with x < 15
};

const Masks& masks() {
    static const Masks m = [] {
        Masks r;
        for (int pos = 0; pos < 256; ++pos) {
            int x = pos & 15;
            if (x != 0) r.not_col0.w[pos >> 6] |= std::uint64_t(1) << (pos & 63);
            if (x != 15) r.not_col15.w[pos >> 6] |= std::uint64_t(1) << (pos & 63);
        }
        return r;
    }();
    return m;
}

// King-quadrant edge boundary of the anchored set on the board: for each of
// the 8 directions, cells whose neighbour exists in the quadrant and is not
// in the set. Down/left neighbours that fall off the board are exactly the
// ones outside the quadrant.
inline std::int64_t board_boundary(const Board& a) {
    const Masks& m = masks();
    std::int64_t total = 0;
    total += popcount(andnot(shl(a & m.not_col15, 1), a));   // +x
    total += popcount(andnot(shr(a & m.not_col0, 1), a));    // -x
    total += popcount(andnot(shl(a, 16), a));                // +y
    total += popcount(andnot(shr(a, 16), a));                // -y
    total += popcount(andnot(shl(a & m.not_col15, 17), a));  // +x +y
    total += popcount(andnot(shr(a & m.not_col15, 15), a));  // +x -y
    total += popcount(andnot(shl(a & m.not_col0, 15), a));   // -x +y
    total += popcount(andnot(shr(a & m.not_col0, 17), a));   // -x -y
    return total;
}

// ---------------------------------------------------------------------------
// Packed keys
// ---------------------------------------------------------------------------

struct KeyHash {
    std::size_t operator()(const Key128& k) const {
        return std::hash<std::uint64_t>()(k.hi * 0x9e3779b97f4a7c15ULL ^ k.lo);
    }
};

inline Key128 pack_sorted_bytes(const std::uint8_t* bytes, int n) {
    Key128 k;
    for (int i = 0; i < n; ++i) {
        if (i < 8)
            k.hi |= static_cast<std::uint64_t>(bytes[i]) << (8 * (7 - i));
        else
            k.lo |= static_cast<std::uint64_t>(bytes[i]) << (8 * (15 - i));
    }
    return k;
}

inline void insertion_sort(std::uint8_t* b, int n) {
    for (int i = 1; i < n; ++i) {
        std::uint8_t v = b[i];
        int j = i - 1;
        while (j >= 0 && b[j] > v) {
            b[j + 1] = b[j];
            --j;
        }
        b[j + 1] = v;
    }
}

}  // namespace

std::vector<std::pair<int, int>> key_cells(const Key128& key, int64_t n) {
    std::vector<std::pair<int, int>> cells;
    cells.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::uint8_t b;
        if (i < 8)
            b = static_cast<std::uint8_t>(key.hi >> (8 * (7 - i)));
        else
            b = static_cast<std::uint8_t>(key.lo >> (8 * (15 - i)));
        cells.emplace_back(b & 15, b >> 4);  // (x, y); byte is (y<<4)|x
    }
    return cells;
}

Key128 cells_key(const std::vector<std::pair<int, int>>& cells) {
    std::uint8_t bytes[16];
    int n = static_cast<int>(cells.size());
    for (int i = 0; i < n; ++i)
        bytes[i] = static_cast<std::uint8_t>((cells[static_cast<std::size_t>(i)].second << 4) |
                                             cells[static_cast<std::size_t>(i)].first);
    insertion_sort(bytes, n);
    return pack_sorted_bytes(bytes, n);
}

Key128 reflect_key(const Key128& key, int64_t n) {
    auto cells = key_cells(key, n);
    for (auto& [x, y] : cells) std::swap(x, y);
    return cells_key(cells);
}

namespace {

// ---------------------------------------------------------------------------
// Untried-set enumeration of fixed king-connected polyforms. Each connected
// set whose colex-least cell is the origin is generated exactly once: the
// universe is restricted to cells not colex-below the origin, candidate cells
// are consumed from a stack, and a consumed cell stays marked for the rest of
// its level so later branches cannot re-add it.
// ---------------------------------------------------------------------------

struct PerLevel {
    int64_t raw_count{0};
    int64_t canonical_count{0};
    int64_t min_boundary{std::numeric_limits<int64_t>::max()};
    int64_t optima_count{0};
    bool overflow{false};
    std::vector<Key128> optima;
};

struct Snapshot {
    std::vector<int> cells;    // universe indices in placement order
    std::vector<int> untried;  // candidate stack at capture time
    std::vector<int> reached;  // marked universe indices
    int min_x{0};
};

struct Universe {
    int n_max;
    int width;   // 2*n_max - 1 columns, x offset n_max - 1
    int height;  // n_max rows
    int x_off;
    std::vector<std::array<int, 8>> nbrs;  // -1 padded
    int origin;

    explicit Universe(int n) : n_max(n), width(2 * n - 1), height(n), x_off(n - 1) {
        nbrs.assign(static_cast<std::size_t>(width * height), {});
        static const int dx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
        static const int dy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
        for (int y = 0; y < height; ++y) {
            for (int x = -x_off; x <= x_off; ++x) {
                int idx = y * width + (x + x_off);
                auto& list = nbrs[static_cast<std::size_t>(idx)];
                int m = 0;
                for (int d = 0; d < 8; ++d) {
                    int vx = x + dx[d], vy = y + dy[d];
                    if (vy < 0 || vy >= height || vx < -x_off || vx > x_off) continue;
                    if (vy == 0 && vx < 0) continue;  // below the origin in colex order
                    list[static_cast<std::size_t>(m++)] = vy * width + (vx + x_off);
                }
                while (m < 8) list[static_cast<std::size_t>(m++)] = -1;
            }
        }
        origin = 0 * width + x_off;
    }

    int x_of(int idx) const { return idx % width - x_off; }
    int y_of(int idx) const { return idx / width; }
};

class Enumerator {
 public:
    Enumerator(const Universe& u, int64_t n_max, const EnumerationBudget& budget)
        : u_(u), n_max_(n_max), budget_(budget) {
        occupied_.assign(u.nbrs.size(), 0);
        reached_.assign(u.nbrs.size(), 0);
        untried_.assign(1024, 0);
        cells_x_.assign(static_cast<std::size_t>(n_max + 1), 0);
        cells_y_.assign(static_cast<std::size_t>(n_max + 1), 0);
        cells_idx_.assign(static_cast<std::size_t>(n_max + 1), 0);
        min_x_.assign(static_cast<std::size_t>(n_max + 1), 0);
        levels_.assign(static_cast<std::size_t>(n_max + 1), PerLevel{});
        for (auto& lvl : levels_) lvl.optima.reserve(64);
    }

    // Full run from the origin root.
    void run() {
        reached_[static_cast<std::size_t>(u_.origin)] = 1;
        untried_[0] = u_.origin;
        rec(0, 1, 0);
        reached_[static_cast<std::size_t>(u_.origin)] = 0;
    }

    // Sequential expansion that captures subtree tasks at `depth`.
    void run_capturing(int depth, std::vector<Snapshot>& out) {
        capture_depth_ = depth;
        capture_ = &out;
        run();
        capture_ = nullptr;
    }

    // Resume a captured subtree.
    void run_snapshot(const Snapshot& snap) {
        for (int idx : snap.reached) reached_[static_cast<std::size_t>(idx)] = 1;
        int size = 0;
        for (int idx : snap.cells) {
            occupied_[static_cast<std::size_t>(idx)] = 1;
            cells_x_[static_cast<std::size_t>(size)] = u_.x_of(idx);
            cells_y_[static_cast<std::size_t>(size)] = u_.y_of(idx);
            min_x_[static_cast<std::size_t>(size)] =
                size == 0 ? u_.x_of(idx)
                          : std::min(min_x_[static_cast<std::size_t>(size - 1)], u_.x_of(idx));
            ++size;
        }
        std::copy(snap.untried.begin(), snap.untried.end(), untried_.begin());
        rec(0, static_cast<int>(snap.untried.size()), size);
        for (int idx : snap.cells) occupied_[static_cast<std::size_t>(idx)] = 0;
        for (int idx : snap.reached) reached_[static_cast<std::size_t>(idx)] = 0;
    }

    std::vector<PerLevel>& levels() { return levels_; }

    // Optional per-set visitor used by enumerate_connected.
    std::function<void(const std::vector<std::pair<int, int>>&)> set_visitor;
    int64_t visitor_volume{0};

 private:
    void visit(int size) {
        auto& lvl = levels_[static_cast<std::size_t>(size)];
        ++lvl.raw_count;

        const int mx = min_x_[static_cast<std::size_t>(size - 1)];
        std::uint8_t bytes[16];
        std::uint8_t rbytes[16];
        Board board;
        for (int i = 0; i < size; ++i) {
            int x = cells_x_[static_cast<std::size_t>(i)] - mx;
            int y = cells_y_[static_cast<std::size_t>(i)];
            int pos = (y << 4) | x;
            board.w[pos >> 6] |= std::uint64_t(1) << (pos & 63);
            bytes[i] = static_cast<std::uint8_t>(pos);
            rbytes[i] = static_cast<std::uint8_t>((x << 4) | y);
        }
        insertion_sort(bytes, size);
        insertion_sort(rbytes, size);
        Key128 key = pack_sorted_bytes(bytes, size);
        Key128 rkey = pack_sorted_bytes(rbytes, size);
        const bool canonical = !(rkey < key);
        if (!canonical && budget_.canonicalize) return;
        if (canonical) ++lvl.canonical_count;

        if (set_visitor && size == visitor_volume) {
            set_visitor(key_cells(key, size));
        }

        const std::int64_t b = board_boundary(board);
        if (b < lvl.min_boundary) {
            lvl.min_boundary = b;
            lvl.optima.clear();
            lvl.optima_count = 0;
            lvl.overflow = false;
        }
        if (b == lvl.min_boundary) {
            ++lvl.optima_count;
            if (static_cast<int64_t>(lvl.optima.size()) < budget_.max_optima_stored)
                lvl.optima.push_back(key);
            else
                lvl.overflow = true;
        }
    }

    // The candidate stack is segmented per level: this call owns [lo, hi0)
    // and a child's list is materialized at hi0, so descendants never clobber
    // entries a caller still has to pop.
    // Monotone boundary lower bound of the current set: distinct rows plus
    // distinct columns plus distinct x-y diagonals (each line's extreme cell
    // has an in-graph neighbour outside any superset in that direction).
    std::int64_t line_bound(int size) {
        bool rows[kMaxVolume] = {};
        bool cols[2 * kMaxVolume] = {};
        bool diags[2 * kMaxVolume] = {};
        std::int64_t total = 0;
        for (int i = 0; i < size; ++i) {
            int y = cells_y_[static_cast<std::size_t>(i)];
            int x = cells_x_[static_cast<std::size_t>(i)] + (kMaxVolume - 1);
            int dgn = cells_x_[static_cast<std::size_t>(i)] -
                      cells_y_[static_cast<std::size_t>(i)] + (kMaxVolume - 1);
            total += !rows[y] + !cols[x] + !diags[dgn];
            rows[y] = cols[x] = diags[dgn] = true;
        }
        return total;
    }

    void rec(int lo, int hi0, int size) {
        int hi = hi0;
        while (hi > lo) {
            const int cell = untried_[static_cast<std::size_t>(--hi)];
            occupied_[static_cast<std::size_t>(cell)] = 1;
            cells_x_[static_cast<std::size_t>(size)] = u_.x_of(cell);
            cells_y_[static_cast<std::size_t>(size)] = u_.y_of(cell);
            cells_idx_[static_cast<std::size_t>(size)] = cell;
            min_x_[static_cast<std::size_t>(size)] =
                size == 0
                    ? u_.x_of(cell)
                    : std::min(min_x_[static_cast<std::size_t>(size - 1)], u_.x_of(cell));
            const int new_size = size + 1;
            if (budget_.prune_bound && line_bound(new_size) > *budget_.prune_bound) {
                occupied_[static_cast<std::size_t>(cell)] = 0;
                continue;  // no superset can come back under the bound
            }
            if (!capture_ || new_size <= capture_depth_) visit(new_size);

            if (new_size < n_max_) {
                const int clo = hi0;
                int chi = clo;
                for (int i = lo; i < hi; ++i)
                    untried_[static_cast<std::size_t>(chi++)] =
                        untried_[static_cast<std::size_t>(i)];
                const int pushed_from = chi;
                for (int d = 0; d < 8; ++d) {
                    int v = u_.nbrs[static_cast<std::size_t>(cell)][static_cast<std::size_t>(d)];
                    if (v < 0) break;  // -1 padding is trailing
                    if (reached_[static_cast<std::size_t>(v)]) continue;
                    reached_[static_cast<std::size_t>(v)] = 1;
                    untried_[static_cast<std::size_t>(chi++)] = v;
                }
                if (capture_ && new_size == capture_depth_) {
                    Snapshot s;
                    s.cells.assign(cells_idx_.begin(), cells_idx_.begin() + new_size);
                    s.untried.assign(untried_.begin() + clo, untried_.begin() + chi);
                    for (std::size_t i = 0; i < reached_.size(); ++i)
                        if (reached_[i]) s.reached.push_back(static_cast<int>(i));
                    s.min_x = min_x_[static_cast<std::size_t>(size)];
                    capture_->push_back(std::move(s));
                } else {
                    rec(clo, chi, new_size);
                }
                for (int i = pushed_from; i < chi; ++i)
                    reached_[static_cast<std::size_t>(untried_[static_cast<std::size_t>(i)])] = 0;
            }
            occupied_[static_cast<std::size_t>(cell)] = 0;
            // `cell` stays reached: later branches at this level exclude it.
        }
    }

    const Universe& u_;
    int64_t n_max_;
    EnumerationBudget budget_;
    std::vector<std::uint8_t> occupied_;
    std::vector<std::uint8_t> reached_;
    std::vector<int> untried_;
    std::vector<int> cells_x_, cells_y_, min_x_;
    std::vector<int> cells_idx_;
    std::vector<PerLevel> levels_;
    std::vector<Snapshot>* capture_{nullptr};
    int capture_depth_{0};
};

void merge_level(PerLevel& into, const PerLevel& from, int64_t cap) {
    into.raw_count += from.raw_count;
    into.canonical_count += from.canonical_count;
    if (from.min_boundary < into.min_boundary) {
        into.min_boundary = from.min_boundary;
        into.optima.clear();
        into.optima_count = 0;
        into.overflow = false;
    }
    if (from.min_boundary == into.min_boundary &&
        from.min_boundary != std::numeric_limits<int64_t>::max()) {
        into.optima_count += from.optima_count;
        for (const Key128& k : from.optima) {
            if (static_cast<int64_t>(into.optima.size()) < cap)
                into.optima.push_back(k);
            else
                into.overflow = true;
        }
        into.overflow = into.overflow || from.overflow;
    }
}

void check_budget(int64_t n_max, const EnumerationBudget& budget) {
    if (n_max < 1) throw std::invalid_argument("exact solver: volume must be >= 1");
    if (n_max > budget.max_volume)
        throw BudgetExceeded("exact solver: volume " + std::to_string(n_max) +
                             " exceeds budget max_volume " + std::to_string(budget.max_volume));
    if (n_max > kMaxVolume)
        throw BudgetExceeded("exact solver: volume " + std::to_string(n_max) +
                             " exceeds the board capacity " + std::to_string(kMaxVolume));
}

}  // namespace

std::vector<LevelResult> solve_levels(int64_t n_max, const EnumerationBudget& budget,
                                      int threads) {
    check_budget(n_max, budget);
    if (threads < 1) threads = 1;
    Universe u(static_cast<int>(n_max));

    std::vector<PerLevel> merged(static_cast<std::size_t>(n_max + 1));

    if (n_max <= 4) {
        Enumerator e(u, n_max, budget);
        e.run();
        merged = e.levels();
    } else {
        const int depth = 4;
        std::vector<Snapshot> tasks;
        {
            Enumerator seq(u, n_max, budget);
            seq.run_capturing(depth, tasks);
            merged = seq.levels();
        }
        std::vector<std::vector<PerLevel>> task_results(tasks.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            Enumerator e(u, n_max, budget);
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                for (auto& lvl : e.levels()) lvl = PerLevel{};
                e.run_snapshot(tasks[i]);
                task_results[i] = e.levels();
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(threads));
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        // deterministic merge in task order, independent of scheduling
        for (const auto& tr : task_results)
            for (std::size_t s = 1; s < tr.size(); ++s)
                merge_level(merged[s], tr[s], budget.max_optima_stored);
    }

    std::vector<LevelResult> out(static_cast<std::size_t>(n_max + 1));
    for (int64_t s = 1; s <= n_max; ++s) {
        auto& lvl = merged[static_cast<std::size_t>(s)];
        auto& r = out[static_cast<std::size_t>(s)];
        r.volume = s;
        r.raw_count = lvl.raw_count;
        r.canonical_count = lvl.canonical_count;
        r.min_boundary = lvl.min_boundary;
        r.optima_count = lvl.optima_count;
        r.optima_overflow = lvl.overflow;
        std::sort(lvl.optima.begin(), lvl.optima.end());
        r.optima = std::move(lvl.optima);
        if (!r.optima.empty()) r.witness_cells = key_cells(r.optima.front(), s);
    }
    return out;
}

void enumerate_connected(int64_t n, const std::function<void(const CellSet&)>& visit,
                         const EnumerationBudget& budget) {
    check_budget(n, budget);
    Universe u(static_cast<int>(n));
    Enumerator e(u, n, budget);
    e.visitor_volume = n;
    e.set_visitor = [&](const std::vector<std::pair<int, int>>& cells) {
        std::vector<std::pair<Coord, Coord>> xy;
        xy.reserve(cells.size());
        for (auto [x, y] : cells) xy.emplace_back(x, y);
        visit(CellSet::quadrant(std::move(xy)));
    };
    e.run();
}

namespace {

CellSet cells_to_set(const std::vector<std::pair<int, int>>& cells) {
    std::vector<std::pair<Coord, Coord>> xy;
    xy.reserve(cells.size());
    for (auto [x, y] : cells) xy.emplace_back(x, y);
    return CellSet::quadrant(std::move(xy));
}

}  // namespace

OptimumResult optimum(int64_t n, const EnumerationBudget& budget, int threads) {
    auto levels = solve_levels(n, budget, threads);
    const LevelResult& lvl = levels[static_cast<std::size_t>(n)];
    return OptimumResult{n, lvl.min_boundary, cells_to_set(lvl.witness_cells),
                         lvl.optima_count, lvl.optima_overflow};
}

MonotonicityReport verify_monotonicity(int64_t n_max, const EnumerationBudget& budget,
                                       int threads) {
    auto levels = solve_levels(n_max, budget, threads);
    MonotonicityReport rep;
    rep.table.assign(static_cast<std::size_t>(n_max + 1), 0);
    rep.pass = true;
    for (int64_t s = 1; s <= n_max; ++s) {
        rep.table[static_cast<std::size_t>(s)] = levels[static_cast<std::size_t>(s)].min_boundary;
        if (s > 1 && rep.table[static_cast<std::size_t>(s)] <
                         rep.table[static_cast<std::size_t>(s - 1)])
            rep.pass = false;
    }
    return rep;
}

ChainReport nested_chain_exists(int64_t n_max, const EnumerationBudget& budget, int threads) {
    return nested_chain_from_levels(solve_levels(n_max, budget, threads));
}

ChainReport nested_chain_from_levels(const std::vector<LevelResult>& levels) {
    const auto n_max = static_cast<int64_t>(levels.size()) - 1;
    if (n_max < 1) throw std::invalid_argument("nested_chain_from_levels: empty run");
    for (int64_t s = 1; s <= n_max; ++s)
        if (levels[static_cast<std::size_t>(s)].optima_overflow)
            throw BudgetExceeded("nested_chain_exists: optima storage overflow at volume " +
                                 std::to_string(s) + "; decision would be unsound");

    // Re-expand canonical representatives with their reflections: subset
    // relations are between actual sets, not reflection classes.
    std::vector<std::vector<Key128>> full(static_cast<std::size_t>(n_max + 1));
    for (int64_t s = 1; s <= n_max; ++s) {
        auto& v = full[static_cast<std::size_t>(s)];
        for (const Key128& k : levels[static_cast<std::size_t>(s)].optima) {
            v.push_back(k);
            Key128 rk = reflect_key(k, s);
            if (!(rk == k)) v.push_back(rk);
        }
        std::sort(v.begin(), v.end());
    }

    std::unordered_set<Key128, KeyHash> reachable(full[1].begin(), full[1].end());
    std::vector<std::unordered_map<Key128, Key128, KeyHash>> parent(
        static_cast<std::size_t>(n_max + 1));
    ChainReport rep;
    for (int64_t s = 2; s <= n_max; ++s) {
        std::unordered_set<Key128, KeyHash> next;
        for (const Key128& bk : full[static_cast<std::size_t>(s)]) {
            auto cells = key_cells(bk, s);
            for (std::size_t drop = 0; drop < cells.size(); ++drop) {
                auto sub = cells;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                Key128 dk = cells_key(sub);
                if (reachable.count(dk)) {
                    next.insert(bk);
                    parent[static_cast<std::size_t>(s)].emplace(bk, dk);
                    break;
                }
            }
        }
        if (next.empty()) {
            rep.exists = false;
            rep.break_volume = s;
            rep.note = "no optimal set of volume " + std::to_string(s) +
                       " contains an optimal set of volume " + std::to_string(s - 1);
            return rep;
        }
        reachable = std::move(next);
    }

    rep.exists = true;
    Key128 cur = *std::min_element(reachable.begin(), reachable.end());
    std::vector<Key128> keys(static_cast<std::size_t>(n_max + 1));
    for (int64_t s = n_max; s >= 2; --s) {
        keys[static_cast<std::size_t>(s)] = cur;
        cur = parent[static_cast<std::size_t>(s)].at(cur);
    }
    keys[1] = cur;
    for (int64_t s = 1; s <= n_max; ++s)
        rep.chain.push_back(cells_to_set(key_cells(keys[static_cast<std::size_t>(s)], s)));
    return rep;
}

int64_t optimum_partition_shaped(int64_t n) {
    // beyond ~44 the unpruned partition scan stops being "seconds"
    return staircase::min_boundary_over_partitions(n, n > 44);
}

std::string exact_csv(const std::vector<LevelResult>& levels) {
    std::ostringstream os;
    os << "n,min_boundary,optima_count,witness\n";
    for (const auto& lvl : levels) {
        if (lvl.volume == 0) continue;
        os << lvl.volume << ',' << lvl.min_boundary << ',' << lvl.optima_count << ",\"[";
        for (std::size_t i = 0; i < lvl.witness_cells.size(); ++i) {
            if (i) os << ',';
            os << '[' << lvl.witness_cells[i].first << ',' << lvl.witness_cells[i].second << ']';
        }
        os << "]\"\n";
    }
    return os.str();
}

}  // namespace isoperim::exact
