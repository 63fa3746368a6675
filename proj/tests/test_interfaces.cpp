#include "doctest.h"
#include "isoperim/bounds.hpp"
#include "isoperim/cell_set.hpp"
#include "isoperim/exact_solver.hpp"
#include "isoperim/reduction.hpp"
#include "isoperim/render.hpp"
#include "json.hpp"

using namespace isoperim;

TEST_CASE("cell set JSON round trip") {
    CellSet a = CellSet::quadrant({{0, 0}, {1, 0}, {0, 1}});
    CellSet b = cell_set_from_json(cell_set_to_json(a));
    CHECK(a.cells() == b.cells());
    CHECK(a.spec() == b.spec());

    // explicit format with "inf" and numeric radius
    CellSet c = cell_set_from_json(
        R"({"spec":{"free_dims":0,"half_dims":2,"p":"inf","radius":1},"cells":[[1,0],[0,0]]})");
    CHECK(c.volume() == 2);
    CHECK(c.spec().is_king_quadrant());

    // rational fields as strings and dyadic doubles
    CellSet d = cell_set_from_json(
        R"({"spec":{"free_dims":2,"half_dims":0,"p":"3/2","radius":1.5},"cells":[[0,0]]})");
    CHECK(d.spec().norm_exponent().p == Rational(3, 2));
    CHECK(d.spec().radius() == Rational(3, 2));
    CellSet e = cell_set_from_json(cell_set_to_json(d));
    CHECK(e.spec() == d.spec());

    // cells come out colex-sorted
    auto j = nlohmann::json::parse(cell_set_to_json(c));
    CHECK(j["cells"][0] == nlohmann::json::array({0, 0}));
    CHECK(j["cells"][1] == nlohmann::json::array({1, 0}));
}

TEST_CASE("cell set JSON diagnostics") {
    CHECK_THROWS_WITH_AS((void)cell_set_from_json("{"), doctest::Contains("parse error"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)cell_set_from_json(R"({"cells":[[0,0]]})"), doctest::Contains("missing"),
        std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)cell_set_from_json(
            R"({"spec":{"free_dims":0,"half_dims":2,"p":"inf","radius":1},"cells":[[0]]})"),
        doctest::Contains("arity"), std::invalid_argument);
    // half-space coordinate out of the graph
    CHECK_THROWS_AS(
        (void)cell_set_from_json(
            R"({"spec":{"free_dims":0,"half_dims":2,"p":"inf","radius":1},"cells":[[0,-1]]})"),
        std::invalid_argument);
}

TEST_CASE("trace JSONL lines parse as JSON") {
    CellSet scattered = CellSet::quadrant({{0, 0}, {4, 4}, {2, 0}});
    auto res = reduction::normalize(scattered);
    std::istringstream in(res.trace.to_jsonl());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("step"));
        CHECK(j["b_after"].get<std::int64_t>() <= j["b_before"].get<std::int64_t>());
        ++lines;
    }
    CHECK(lines == static_cast<int>(res.trace.steps.size()));
}

TEST_CASE("ascii render") {
    CHECK(render::ascii(CellSet::quadrant({{0, 0}})) == "_#\n");
    auto art = render::ascii(CellSet::quadrant({{0, 0}, {1, 1}}));
    CHECK(art == " .#\n_#.\n");
}

TEST_CASE("svg render carries per-direction edge classes") {
    auto svg = render::svg(CellSet::quadrant({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("class=\"cell\"") != std::string::npos);
    CHECK(svg.find("class=\"e-h\"") != std::string::npos);
    CHECK(svg.find("class=\"e-v\"") != std::string::npos);
    CHECK(svg.find("class=\"e-ur\"") != std::string::npos);
    CHECK(svg.find("class=\"e-ul\"") != std::string::npos);
    CHECK(svg.find("class=\"e-dr\"") != std::string::npos);
}

TEST_CASE("exact CSV format") {
    auto levels = exact::solve_levels(3);
    auto csv = exact::exact_csv(levels);
    CHECK(csv.find("n,min_boundary,optima_count,witness\n") == 0);
    CHECK(csv.find("1,3,1,\"[[0,0]]\"\n") != std::string::npos);
}

TEST_CASE("boundary edge list is deterministic and complete") {
    CellSet block = CellSet::quadrant({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto edges = edge_boundary_edges(block);
    CHECK(static_cast<std::int64_t>(edges.size()) == edge_boundary(block));
    for (std::size_t i = 1; i < edges.size(); ++i) {
        int c = colex_compare(edges[i - 1].first, edges[i].first);
        CHECK(c <= 0);
    }
}
