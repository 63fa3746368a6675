#include "isoperim/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isoperim::render {

namespace {

void require_2d(const CellSet& A, const char* what) {
    if (A.spec().dims() != 2)
        throw std::invalid_argument(std::string(what) + ": only 2-d sets are rendered");
    if (A.empty()) throw std::invalid_argument(std::string(what) + ": empty set");
}

}  // namespace

std::string ascii(const CellSet& A) {
    require_2d(A, "render::ascii");
    Coord minx = A.cells()[0][0], maxx = minx, miny = A.cells()[0][1], maxy = miny;
    for (const Point& p : A.cells()) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    }
    if (A.spec().half_dims() == 2) {
        minx = std::min<Coord>(minx, 0);
        miny = std::min<Coord>(miny, 0);
    }
    std::ostringstream os;
    for (Coord y = maxy; y >= miny; --y) {
        os << (y == 0 && A.spec().half_dims() == 2 ? '_' : ' ');
        for (Coord x = minx; x <= maxx; ++x)
            os << (A.contains(Point{x, y}) ? '#' : '.');
        os << '\n';
    }
    return os.str();
}

std::string svg(const CellSet& A) {
    require_2d(A, "render::svg");
    const int cell = 24;
    Coord minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (const Point& p : A.cells()) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    }
    // one ring of margin so boundary edges to outside cells stay visible
    minx -= 1;
    miny -= 1;
    maxx += 1;
    maxy += 1;
    auto px = [&](Coord x) { return (x - minx) * cell; };
    auto py = [&](Coord y) { return (maxy - y) * cell; };  // flip y

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (maxx - minx + 1) * cell
       << "\" height=\"" << (maxy - miny + 1) * cell << "\">\n";
    os << "<style>\n"
          ".cell{fill:#7aa7d6;stroke:#2b4a6f;stroke-width:1}\n"
          ".axis{stroke:#333;stroke-width:2}\n"
          ".e-h{stroke:#c22;stroke-width:2}\n"
          ".e-v{stroke:#2a2;stroke-width:2}\n"
          ".e-ur{stroke:#d81;stroke-width:2}\n"
          ".e-dr{stroke:#19c;stroke-width:2;stroke-dasharray:5 3}\n"
          ".e-ul{stroke:#91c;stroke-width:2;stroke-dasharray:5 3}\n"
          ".e-dl{stroke:#777;stroke-width:2;stroke-dasharray:2 3}\n"
          ".e-x{stroke:#000;stroke-width:1;stroke-dasharray:1 2}\n"
          "</style>\n";
    for (const Point& p : A.cells())
        os << "<rect class=\"cell\" x=\"" << px(p[0]) << "\" y=\"" << py(p[1]) << "\" width=\""
           << cell << "\" height=\"" << cell << "\"/>\n";
    // axes of the quadrant, when applicable
    if (A.spec().half_dims() == 2) {
        os << "<line class=\"axis\" x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0)
           << "\" y2=\"" << (maxy - miny + 1) * cell << "\"/>\n";
        os << "<line class=\"axis\" x1=\"0\" y1=\"" << (py(0) + cell) << "\" x2=\""
           << (maxx - minx + 1) * cell << "\" y2=\"" << (py(0) + cell) << "\"/>\n";
    }
    for (const auto& [a, v] : edge_boundary_edges(A)) {
        Coord dx = v[0] - a[0], dy = v[1] - a[1];
        const char* cls = "e-x";
        if (dy == 0)
            cls = "e-h";
        else if (dx == 0)
            cls = "e-v";
        else if (dx == 1 && dy == 1)
            cls = "e-ur";
        else if (dx == 1 && dy == -1)
            cls = "e-dr";
        else if (dx == -1 && dy == 1)
            cls = "e-ul";
        else if (dx == -1 && dy == -1)
            cls = "e-dl";
        os << "<line class=\"" << cls << "\" x1=\"" << px(a[0]) + cell / 2 << "\" y1=\""
           << py(a[1]) + cell / 2 << "\" x2=\"" << px(v[0]) + cell / 2 << "\" y2=\""
           << py(v[1]) + cell / 2 << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace isoperim::render
