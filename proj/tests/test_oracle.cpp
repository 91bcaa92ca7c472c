#include <doctest.h>

#include "mbsb/errors.hpp"
#include "mbsb/oracle.hpp"
#include "test_support.hpp"

using namespace mbsb;

namespace {

const std::vector<Point3> red01 = {{0, 0, 0}, {1, 1, 1}};

std::vector<Point3> blockers(const Box3& at) {
    return {{at.hi[0], 0.5, 0.5}, {at.lo[0], 0.5, 0.5}, {0.5, at.hi[1], 0.5},
            {0.5, at.lo[1], 0.5}, {0.5, 0.5, at.hi[2]}, {0.5, 0.5, at.lo[2]}};
}

}  // namespace

TEST_CASE("six blockers only: the whole annulus is the optimum") {
    auto blue = blockers(Box3{{-2, -1, -3}, {3, 4, 2}});
    OracleResult r = solve_bruteforce(red01, blue);
    REQUIRE(r.bounded);
    CHECK(r.best_volume == 125.0);
    CHECK(r.box == Box3{{-2, -1, -3}, {3, 4, 2}});
}

TEST_CASE("corner point caps one axis: 2.5 * 3 * 3") {
    auto blue = blockers(Box3{{-1, -1, -1}, {2, 2, 2}});
    blue.push_back({1.5, 1.5, 1.5});
    OracleResult r = solve_bruteforce(red01, blue);
    REQUIRE(r.bounded);
    CHECK(r.best_volume == 22.5);
    CHECK(check_maximal(build_scene(red01, blue), r.box));
}

TEST_CASE("no blue: unbounded in all six directions") {
    std::vector<Point3> none;
    OracleResult r = solve_bruteforce(red01, none);
    CHECK_FALSE(r.bounded);
    CHECK(r.unbounded_directions.size() == 6);
}

TEST_CASE("errors: empty red, non-finite, cap") {
    std::vector<Point3> none;
    std::vector<Point3> blue = {{1, 1, 1}};
    CHECK_THROWS_AS(solve_bruteforce(none, blue), empty_red_set);
    std::vector<Point3> bad_red = {{0, 0, inf}};
    CHECK_THROWS_AS(solve_bruteforce(bad_red, blue), non_finite_input);
    std::vector<Point3> many(15, Point3{2, 2, 2});
    CHECK_THROWS_AS(solve_bruteforce(red01, many), oracle_cap_exceeded);
}

TEST_CASE("check_maximal basics") {
    auto blue = blockers(Box3{{-1, -1, -1}, {2, 2, 2}});
    Scene s = build_scene(red01, blue);
    CHECK(check_maximal(s, s.s_max));
    CHECK_FALSE(check_maximal(s, Box3{{-0.5, -1, -1}, {2, 2, 2}}));
}

TEST_CASE("oracle optimum is face-flush and maximal on random scenes") {
    int scenes = 0;
    for (std::uint64_t seed = 0; seed < 2000 && scenes < 120; ++seed) {
        Dataset ds = test::random_dataset(seed, 1 + seed % 10, seed % 13);
        OracleResult r = solve_bruteforce(ds.red, ds.blue);
        if (!r.bounded) continue;
        ++scenes;
        Scene s = build_scene(ds.red, ds.blue);
        CHECK(check_maximal(s, r.box));
        // each face at the s_max bound or at a retained blue coordinate
        for (Direction d : all_directions) {
            const double b = r.box.bound(d);
            bool flush = b == s.s_max.bound(d);
            for (const Point3& q : s.retained) flush |= q[axis_of(d)] == b;
            CHECK(flush);
        }
        CHECK((r.box.contains_box(s.s_min) && s.s_max.contains_box(r.box)));
        bool invaded = false;
        for (const Point3& q : s.retained) invaded |= contains_open(r.box, q);
        CHECK_FALSE(invaded);
    }
    CHECK(scenes >= 80);
}

TEST_CASE("oracle is monotone under blue deletion") {
    for (std::uint64_t seed = 300; seed < 340; ++seed) {
        Dataset ds = test::random_dataset(seed, 2 + seed % 8, 4 + seed % 9);
        OracleResult all = solve_bruteforce(ds.red, ds.blue);
        for (std::size_t drop = 0; drop < ds.blue.size(); ++drop) {
            auto fewer = ds.blue;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
            OracleResult sub = solve_bruteforce(ds.red, fewer);
            if (!sub.bounded) continue;  // deletion can only unbound
            REQUIRE(all.bounded);
            CHECK(sub.best_volume >= all.best_volume);
        }
    }
}
