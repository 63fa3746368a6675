#include "isoperim/cell_set.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace isoperim {

CellSet::CellSet(GridSpec spec, std::vector<Point> cells)
    : spec_(std::move(spec)), cells_(std::move(cells)) {
    for (const Point& p : cells_) spec_.require_in_graph(p);
    std::sort(cells_.begin(), cells_.end(), colex_less);
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool CellSet::contains(const Point& p) const {
    return std::binary_search(cells_.begin(), cells_.end(), p, colex_less);
}

CellSet CellSet::quadrant(std::vector<std::pair<Coord, Coord>> xy) {
    std::vector<Point> pts;
    pts.reserve(xy.size());
    for (auto& [x, y] : xy) pts.push_back(Point{x, y});
    return CellSet(GridSpec::king_quadrant(), std::move(pts));
}

std::int64_t edge_boundary(const CellSet& A) {
    // Each qualifying edge {a, v} with v outside A is counted exactly once,
    // from its unique endpoint inside A.
    std::int64_t count = 0;
    const GridSpec& g = A.spec();
    for (const Point& a : A.cells()) {
        for (const Point& o : g.stencil()) {
            Point v = a + o;
            if (g.in_graph(v) && !A.contains(v)) ++count;
        }
    }
    return count;
}

std::vector<std::pair<Point, Point>> edge_boundary_edges(const CellSet& A) {
    std::vector<std::pair<Point, Point>> out;
    const GridSpec& g = A.spec();
    for (const Point& a : A.cells()) {
        for (const Point& o : g.stencil()) {
            Point v = a + o;
            if (g.in_graph(v) && !A.contains(v)) out.emplace_back(a, v);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& e1, const auto& e2) {
        int c = colex_compare(e1.first, e2.first);
        if (c != 0) return c < 0;
        return colex_less(e1.second, e2.second);
    });
    return out;
}

std::int64_t vertex_boundary(const CellSet& A) {
    std::vector<Point> outside;
    const GridSpec& g = A.spec();
    for (const Point& a : A.cells()) {
        for (const Point& o : g.stencil()) {
            Point v = a + o;
            if (g.in_graph(v) && !A.contains(v)) outside.push_back(std::move(v));
        }
    }
    std::sort(outside.begin(), outside.end(), colex_less);
    outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
    return static_cast<std::int64_t>(outside.size());
}

Point extremal_point(const CellSet& A) {
    if (A.empty()) throw std::invalid_argument("extremal_point: empty set");
    Coord r = 0;
    for (const Point& p : A.cells()) r = std::max(r, shell_index(p));
    const Point* best = nullptr;
    for (const Point& p : A.cells()) {
        if (shell_index(p) != r) continue;
        if (!best || colex_less(*best, p)) best = &p;
    }
    return *best;
}

namespace {

nlohmann::json rational_to_json(const Rational& r) {
    if (r.is_integer()) return r.num;
    return r.str();  // "num/den", lossless
}

Rational rational_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw std::invalid_argument(std::string("bad rational field: ") + what);
}

}  // namespace

std::string cell_set_to_json(const CellSet& A) {
    nlohmann::json j;
    j["spec"]["free_dims"] = A.spec().free_dims();
    j["spec"]["half_dims"] = A.spec().half_dims();
    if (A.spec().norm_exponent().infinite)
        j["spec"]["p"] = "inf";
    else
        j["spec"]["p"] = rational_to_json(A.spec().norm_exponent().p);
    j["spec"]["radius"] = rational_to_json(A.spec().radius());
    auto cells = nlohmann::json::array();
    for (const Point& p : A.cells()) cells.push_back(p.coords);
    j["cells"] = std::move(cells);
    return j.dump();
}

CellSet cell_set_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("cell set JSON parse error: ") + e.what());
    }
    if (!j.contains("spec") || !j.contains("cells"))
        throw std::invalid_argument("cell set JSON: missing \"spec\" or \"cells\"");
    const auto& s = j["spec"];
    for (const char* f : {"free_dims", "half_dims", "p", "radius"})
        if (!s.contains(f))
            throw std::invalid_argument(std::string("cell set JSON: spec missing \"") + f + "\"");
    NormExponent p;
    if (s["p"].is_string() && s["p"].get<std::string>() == "inf")
        p = NormExponent::inf();
    else
        p = NormExponent::finite(rational_from_json(s["p"], "p"));
    GridSpec spec(s["free_dims"].get<int>(), s["half_dims"].get<int>(), p,
                  rational_from_json(s["radius"], "radius"));
    std::vector<Point> cells;
    for (std::size_t i = 0; i < j["cells"].size(); ++i) {
        const auto& c = j["cells"][i];
        if (!c.is_array() || c.size() != static_cast<std::size_t>(spec.dims()))
            throw std::invalid_argument("cell set JSON: cell " + std::to_string(i) +
                                        " has wrong arity");
        cells.push_back(Point(c.get<std::vector<Coord>>()));
    }
    return CellSet(spec, std::move(cells));
}

CellSet load_cell_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cell set file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return cell_set_from_json(ss.str());
}

void save_cell_set(const CellSet& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write cell set file: " + path);
    out << cell_set_to_json(A) << "\n";
}

}  // namespace isoperim
