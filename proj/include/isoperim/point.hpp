#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace isoperim {

using Coord = std::int64_t;

/// A lattice point with exact integer coordinates. Free coordinates come
/// first, half-space coordinates last (they must be >= 0 for the point to lie
/// in the graph; see GridSpec::in_graph).
struct Point {
    std::vector<Coord> coords;

    Point() = default;
    explicit Point(std::vector<Coord> c) : coords(std::move(c)) {}
    Point(std::initializer_list<Coord> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    Coord operator[](std::size_t i) const { return coords[i]; }
    Coord& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Colexicographic comparison: the last differing coordinate decides.
/// Returns -1, 0 or +1.
inline int colex_compare(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("colex_compare: dimension mismatch");
    for (std::size_t i = a.dim(); i-- > 0;) {
        if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i] ? -1 : 1;
    }
    return 0;
}

inline bool colex_less(const Point& a, const Point& b) { return colex_compare(a, b) < 0; }

/// Chebyshev shell index ||x||_inf.
inline Coord shell_index(const Point& x) {
    Coord m = 0;
    for (Coord c : x.coords) {
        Coord a = c < 0 ? -c : c;
        if (a > m) m = a;
    }
    return m;
}

/// Point reflection of y through x: 2x - y. May land outside the graph.
inline Point reflect(const Point& x, const Point& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("reflect: dimension mismatch");
    Point r = x;
    for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] = 2 * x.coords[i] - y.coords[i];
    return r;
}

inline Point operator+(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("point add: dimension mismatch");
    Point r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] += b.coords[i];
    return r;
}

inline Point operator-(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("point sub: dimension mismatch");
    Point r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

}  // namespace isoperim
