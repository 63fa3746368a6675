#pragma once

#include <string>

#include "isoperim/cell_set.hpp"

namespace isoperim::render {

/// Text rendering of a 2-d cell set: '#' cells, '.' empty, axes on the
/// left/bottom edges of the window.
std::string ascii(const CellSet& A);

/// SVG rendering: cells as squares, boundary edges as strokes styled per
/// direction class (the four diagonal directions get distinct styles).
std::string svg(const CellSet& A);

}  // namespace isoperim::render
