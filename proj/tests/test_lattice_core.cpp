#include <algorithm>
#include <random>

#include "doctest.h"
#include "isoperim/cell_set.hpp"
#include "isoperim/checks.hpp"
#include "isoperim/grid_spec.hpp"

using namespace isoperim;

namespace {

CellSet quad(std::vector<std::pair<Coord, Coord>> xy) {
    return CellSet::quadrant(std::move(xy));
}

CellSet block2x2() { return quad({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(3, 2) < Rational(2));
    CHECK(rational_from_double(1.5) == Rational(3, 2));
    CHECK(rational_from_double(0.25) == Rational(1, 4));
    CHECK(rational_from_string("1.5") == Rational(3, 2));
    CHECK(rational_from_string("-3/2") == Rational(-3, 2));
    CHECK(rational_from_string("7") == Rational(7));
}

TEST_CASE("colex order and shells") {
    CHECK(colex_compare(Point{5, 0}, Point{0, 1}) < 0);
    CHECK(colex_compare(Point{0, 3}, Point{1, 3}) < 0);
    CHECK(colex_compare(Point{2, 2}, Point{2, 2}) == 0);
    CHECK(shell_index(Point{0, 0}) == 0);
    CHECK(shell_index(Point{-3, 2}) == 3);
    CHECK(shell_index(Point{1, 1}) == 1);

    // total order on random triples
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coord> d(-5, 5);
    for (int i = 0; i < 2000; ++i) {
        Point a{d(rng), d(rng), d(rng)};
        Point b{d(rng), d(rng), d(rng)};
        Point c{d(rng), d(rng), d(rng)};
        int ab = colex_compare(a, b), ba = colex_compare(b, a);
        CHECK(ab == -ba);
        CHECK((colex_compare(a, a) == 0));
        if (ab < 0 && colex_compare(b, c) < 0) CHECK(colex_compare(a, c) < 0);
        if (ab == 0) CHECK(a == b);
    }
}

TEST_CASE("reflection is an involution") {
    CHECK(reflect(Point{0, 0}, Point{1, 1}) == Point{-1, -1});
    CHECK(reflect(Point{2, 2}, Point{2, 2}) == Point{2, 2});
    CHECK(reflect(Point{3, 2}, Point{2, 2}) == Point{4, 2});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Coord> d(-8, 8);
    for (int i = 0; i < 1000; ++i) {
        Point x{d(rng), d(rng)};
        Point y{d(rng), d(rng)};
        CHECK(reflect(x, reflect(x, y)) == y);
    }
}

TEST_CASE("king quadrant neighborhoods") {
    GridSpec g = GridSpec::king_quadrant();
    CHECK(g.stencil().size() == 8);

    auto corner = neighbors(g, Point{0, 0});
    std::vector<Point> expect{{1, 0}, {0, 1}, {1, 1}};
    std::sort(expect.begin(), expect.end(), colex_less);
    CHECK(corner == expect);

    CHECK(neighbors(g, Point{5, 5}).size() == 8);
    CHECK_THROWS_AS((void)neighbors(g, Point{-1, 0}), std::invalid_argument);
}

TEST_CASE("l1 grid stencil") {
    GridSpec g = GridSpec::l1_grid(2);
    auto nb = neighbors(g, Point{0, 0});
    std::vector<Point> expect{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::sort(expect.begin(), expect.end(), colex_less);
    CHECK(nb == expect);
}

TEST_CASE("euclidean stencil with rational radius") {
    // p = 2, radius 3/2: axis offsets (norm 1) and diagonals (norm sqrt 2)
    GridSpec g(2, 0, NormExponent::finite(Rational(2)), Rational(3, 2));
    CHECK(g.stencil().size() == 8);
    // radius 1 drops the diagonals
    GridSpec h(2, 0, NormExponent::finite(Rational(2)), Rational(1));
    CHECK(h.stencil().size() == 4);
}

TEST_CASE("fractional p stencil membership") {
    // p = 3/2, radius 1.9: ||(1,1)||_{3/2} = 2^{2/3} ~ 1.587 <= 1.9
    CHECK(offset_within_radius(Point{1, 1}, NormExponent::finite(Rational(3, 2)),
                               Rational(19, 10)));
    // ||(1,1)||_{3/2} > 1.5
    CHECK_FALSE(offset_within_radius(Point{1, 1}, NormExponent::finite(Rational(3, 2)),
                                     Rational(3, 2)));
    // single nonzero coordinate: exact rational comparison
    CHECK(offset_within_radius(Point{0, 1}, NormExponent::finite(Rational(3, 2)), Rational(1)));
    CHECK_FALSE(
        offset_within_radius(Point{0, 2}, NormExponent::finite(Rational(3, 2)), Rational(1)));
}

TEST_CASE("local symmetry") {
    CHECK(is_locally_symmetric(GridSpec::king_quadrant()).symmetric);
    CHECK(is_locally_symmetric(GridSpec::l1_grid(2)).symmetric);
    CHECK(is_locally_symmetric(GridSpec(2, 0, NormExponent::inf(), Rational(1))).symmetric);

    auto w = central_symmetry_witness({Point{1, 0}, Point{0, 1}});
    REQUIRE(w.has_value());
    CHECK(*w == Point{1, 0});
}

TEST_CASE("edge boundary on the king quadrant") {
    CHECK(edge_boundary(quad({{0, 0}})) == 3);
    CHECK(edge_boundary(block2x2()) == 9);
    // heights (3,3,3,2)
    CellSet fig = quad({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2},
                        {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}});
    CHECK(fig.volume() == 11);
    CHECK(edge_boundary(fig) == 16);

    // interior / edge / corner single cells
    CHECK(edge_boundary(quad({{4, 4}})) == 8);
    CHECK(edge_boundary(quad({{4, 0}})) == 5);
}

TEST_CASE("vertex boundary") {
    CHECK(vertex_boundary(quad({{0, 0}})) == 3);
    CHECK(vertex_boundary(block2x2()) == 5);
    GridSpec l1 = GridSpec::l1_grid(2);
    CellSet single(l1, {Point{0, 0}});
    CHECK(edge_boundary(single) == 4);
    CHECK(vertex_boundary(single) == 4);
}

TEST_CASE("neighborhood symmetry property") {
    std::mt19937_64 rng(3);
    for (const GridSpec& g :
         {GridSpec::king_quadrant(), GridSpec::l1_grid(2),
          GridSpec(1, 1, NormExponent::inf(), Rational(1)),
          GridSpec(2, 0, NormExponent::finite(Rational(2)), Rational(3, 2))}) {
        std::uniform_int_distribution<Coord> d(0, 6);
        for (int i = 0; i < 200; ++i) {
            std::vector<Coord> c;
            for (int k = 0; k < g.dims(); ++k) c.push_back(d(rng));
            Point x(c);
            for (const Point& y : neighbors(g, x)) {
                auto back = neighbors(g, y);
                CHECK(std::find(back.begin(), back.end(), x) != back.end());
            }
        }
    }
}

TEST_CASE("boundary additivity for far-apart pieces") {
    std::mt19937_64 rng(5);
    GridSpec g = GridSpec::king_quadrant();
    for (int i = 0; i < 100; ++i) {
        CellSet a = checks::random_connected_set(g, 5, rng);
        // translate a far copy
        std::vector<Point> shifted;
        for (const Point& p : a.cells()) shifted.push_back(Point{p[0] + 40, p[1] + 3});
        CellSet b(g, shifted);
        std::vector<Point> both = a.cells();
        both.insert(both.end(), shifted.begin(), shifted.end());
        CellSet u(g, both);
        CHECK(edge_boundary(u) == edge_boundary(a) + edge_boundary(b));
    }
}

TEST_CASE("axis fold") {
    GridSpec g = GridSpec::king_quadrant();
    CHECK(axis_fold(g, Point{0, 0}, Point{1, 0}) == Point{1, 0});
    CHECK(axis_fold(g, Point{2, 2}, Point{1, 1}) == Point{3, 3});
    CHECK(axis_fold(g, Point{0, 5}, Point{1, 5}) == Point{1, 5});
    // mixed graph: free coordinate reflects, half coordinate folds
    GridSpec m(1, 1, NormExponent::inf(), Rational(1));
    CHECK(axis_fold(m, Point{0, 0}, Point{1, 1}) == Point{-1, 1});
}

TEST_CASE("extremal point") {
    CHECK(extremal_point(quad({{0, 0}})) == Point{0, 0});
    GridSpec z2(2, 0, NormExponent::inf(), Rational(1));
    CellSet l(z2, {Point{0, 0}, Point{1, 0}, Point{0, 1}});
    CHECK(extremal_point(l) == Point{0, 1});
    CHECK(extremal_point(block2x2()) == Point{1, 1});
}
