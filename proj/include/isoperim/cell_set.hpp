#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isoperim/grid_spec.hpp"
#include "isoperim/point.hpp"

namespace isoperim {

/// A finite set of lattice points of one GridSpec. Cells are stored
/// deduplicated and colex-sorted, so iteration order and serialized output
/// are deterministic.
class CellSet {
 public:
    CellSet(GridSpec spec, std::vector<Point> cells);

    const GridSpec& spec() const { return spec_; }
    const std::vector<Point>& cells() const { return cells_; }
    std::int64_t volume() const { return static_cast<std::int64_t>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    bool contains(const Point& p) const;

    /// Convenience for 2-d quadrant sets given as (x, y) pairs.
    static CellSet quadrant(std::vector<std::pair<Coord, Coord>> xy);

 private:
    GridSpec spec_;
    std::vector<Point> cells_;
};

/// Number of edges with exactly one endpoint in A.
std::int64_t edge_boundary(const CellSet& A);

/// The boundary edges themselves, as (inside cell, outside cell) pairs in
/// deterministic order.
std::vector<std::pair<Point, Point>> edge_boundary_edges(const CellSet& A);

/// Number of points outside A adjacent to at least one point of A.
std::int64_t vertex_boundary(const CellSet& A);

/// The colex-greatest point of A within its outermost Chebyshev shell.
Point extremal_point(const CellSet& A);

/// JSON (de)serialization, format:
/// {"spec": {"free_dims": k, "half_dims": d, "p": "inf"|number|"a/b",
///  "radius": number|"a/b"}, "cells": [[...], ...]}
std::string cell_set_to_json(const CellSet& A);
CellSet cell_set_from_json(const std::string& text);
CellSet load_cell_set(const std::string& path);
void save_cell_set(const CellSet& A, const std::string& path);

}  // namespace isoperim
