#include <doctest.h>

#include <random>

#include "mbsb/geom.hpp"
#include "test_support.hpp"

using namespace mbsb;

TEST_CASE("volume of plain, degenerate and unbounded boxes") {
    CHECK(volume(Box3{{0, 0, 0}, {1, 2, 3}}) == 6.0);
    CHECK(volume(Box3{{0, 0, 1}, {1, 1, 1}}) == 0.0);
    CHECK(volume(Box3{{0, 0, 0}, {1, 1, inf}}) == inf);
    CHECK(volume(Box3{{0, 0, 0}, {0, 1, inf}}) == inf);
}

TEST_CASE("closed containment includes the boundary") {
    const Box3 b = test::unit_box();
    CHECK(contains_closed(b, {0.5, 0.5, 0.5}));
    CHECK(contains_closed(b, {1, 1, 1}));
    CHECK_FALSE(contains_closed(b, {1.0001, 0.5, 0.5}));
}

TEST_CASE("open containment excludes faces and corners") {
    const Box3 b = test::unit_box();
    CHECK(contains_open(b, {0.5, 0.5, 0.5}));
    CHECK_FALSE(contains_open(b, {1, 0.5, 0.5}));
    CHECK_FALSE(contains_open(b, {0, 0, 0}));
}

TEST_CASE("open containment implies closed containment") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 2000; ++t) {
        Box3 b;
        for (int a = 0; a < 3; ++a) {
            double x = u(rng), y = u(rng);
            b.lo[a] = std::min(x, y);
            b.hi[a] = std::max(x, y);
        }
        Point3 p{u(rng), u(rng), u(rng)};
        if (contains_open(b, p)) CHECK(contains_closed(b, p));
    }
}

TEST_CASE("volume is monotone under box inclusion") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-3, 3);
    std::uniform_real_distribution<double> grow(0, 2);
    for (int t = 0; t < 2000; ++t) {
        Box3 inner;
        for (int a = 0; a < 3; ++a) {
            double x = u(rng), y = u(rng);
            inner.lo[a] = std::min(x, y);
            inner.hi[a] = std::max(x, y);
        }
        Box3 outer = inner;
        for (int a = 0; a < 3; ++a) {
            outer.lo[a] -= grow(rng);
            outer.hi[a] += grow(rng);
        }
        CHECK(volume(inner) <= volume(outer));
    }
}

TEST_CASE("direction opposition is an involution") {
    for (Direction d : all_directions) {
        CHECK(opposite(opposite(d)) == d);
        CHECK(opposite(d) != d);
        CHECK(axis_of(opposite(d)) == axis_of(d));
        CHECK(sign_of(opposite(d)) == -sign_of(d));
    }
    CHECK(direction_of(0, +1) == Direction::right);
    CHECK(direction_of(1, +1) == Direction::front);
    CHECK(direction_of(2, +1) == Direction::top);
}

TEST_CASE("box bound accessors follow direction sign") {
    Box3 b{{-1, -2, -3}, {4, 5, 6}};
    CHECK(b.bound(Direction::left) == -1);
    CHECK(b.bound(Direction::right) == 4);
    CHECK(b.bound(Direction::back) == -2);
    CHECK(b.bound(Direction::front) == 5);
    CHECK(b.bound(Direction::bottom) == -3);
    CHECK(b.bound(Direction::top) == 6);
    b.set_bound(Direction::front, 9);
    CHECK(b.hi[1] == 9);
}

TEST_CASE("lexicographic box order compares lo then hi") {
    Box3 a{{0, 0, 0}, {1, 1, 1}};
    Box3 b{{0, 0, 0}, {1, 1, 2}};
    CHECK(lex_less(a, b));
    CHECK_FALSE(lex_less(b, a));
    CHECK_FALSE(lex_less(a, a));
    Box3 c{{-1, 0, 0}, {1, 1, 1}};
    CHECK(lex_less(c, a));
}
