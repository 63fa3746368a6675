#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "isoperim/point.hpp"
#include "isoperim/rational.hpp"

namespace isoperim {

/// A lattice graph on Z^k x N^d whose adjacency is induced by an lp norm:
/// x ~ y iff 0 < ||x - y||_p <= radius. The offset stencil is computed once
/// (exact membership tests, no floating point) and shared read-only, so
/// copies are cheap and concurrent queries are safe.
class GridSpec {
 public:
    GridSpec(int free_dims, int half_dims, NormExponent p, Rational radius);

    /// The king quadrant (N^2, l_inf, radius 1).
    static GridSpec king_quadrant();
    /// Z^k under l1 radius 1 (the classic grid).
    static GridSpec l1_grid(int k);

    int free_dims() const;
    int half_dims() const;
    int dims() const;
    const NormExponent& norm_exponent() const;
    const Rational& radius() const;

    /// All nonzero offsets o with ||o||_p <= radius, sorted colexicographically.
    const std::vector<Point>& stencil() const;

    bool in_graph(const Point& x) const;
    void require_in_graph(const Point& x) const;

    bool is_king_quadrant() const;

    friend bool operator==(const GridSpec& a, const GridSpec& b);

 private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// In-graph neighbours of x: { y : 0 < ||x-y||_p <= radius } intersected with
/// the graph. Rejects x that lies outside the graph.
std::vector<Point> neighbors(const GridSpec& spec, const Point& x);

bool adjacent(const GridSpec& spec, const Point& a, const Point& b);

/// Exact test ||o||_p <= radius for an integer offset.
bool offset_within_radius(const Point& o, const NormExponent& p, const Rational& radius);

/// Central-symmetry check of an arbitrary offset stencil; returns the first
/// (colex order) offset whose negation is missing, or nullopt if symmetric.
std::optional<Point> central_symmetry_witness(std::vector<Point> stencil);

struct SymmetryReport {
    bool symmetric{true};
    std::optional<Point> witness;
};

/// Definition check for the spec's local symmetry: the lp stencil must satisfy
/// o in O <=> -o in O.
SymmetryReport is_locally_symmetric(const GridSpec& spec);

/// Theorem-2 style fold: reflect y through b, then for every half-space
/// coordinate that became negative replace it by its absolute value.
/// Requires b, y in-graph and adjacent.
Point axis_fold(const GridSpec& spec, const Point& b, const Point& y);

}  // namespace isoperim
