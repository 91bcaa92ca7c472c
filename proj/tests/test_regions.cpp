#include <doctest.h>

#include "mbsb/staircase.hpp"
#include "test_support.hpp"

using namespace mbsb;

namespace {

Scene scene_with_blue(std::vector<Point3> blue) {
    std::vector<Point3> red = {{0, 0, 0}, {1, 1, 1}};
    // far blockers keep the annulus bounded without entering any staircase
    for (Direction d : all_directions) {
        Point3 p{0.5, 0.5, 0.5};
        p[axis_of(d)] = sign_of(d) > 0 ? 50.0 : -49.0;
        blue.push_back(p);
    }
    return build_scene(red, blue);
}

bool dominates_2d(const Scene& s, RegionId r, const Point3& a, const Point3& b) {
    int ax1 = -1, ax2 = -1;
    for (int ax = 0; ax < 3; ++ax) {
        if (r.sign[ax] == 0) continue;
        (ax1 < 0 ? ax1 : ax2) = ax;
    }
    return mapped_dist(s.s_min, a, ax1, r.sign[ax1]) <= mapped_dist(s.s_min, b, ax1, r.sign[ax1]) &&
           mapped_dist(s.s_min, a, ax2, r.sign[ax2]) <= mapped_dist(s.s_min, b, ax2, r.sign[ax2]);
}

}  // namespace

TEST_CASE("2d staircase drops dominated points, keeps canonical order") {
    Scene s = scene_with_blue({{2, 0.5, 2}, {3, 0.5, 1.5}, {2.5, 0.5, 3}});
    auto st = build_staircase2d(s, RegionId::edge(0, +1, 2, +1));
    REQUIRE(st.steps.size() == 2);
    CHECK(s.retained[static_cast<std::size_t>(st.steps[0])] == Point3{2, 0.5, 2});
    CHECK(s.retained[static_cast<std::size_t>(st.steps[1])] == Point3{3, 0.5, 1.5});
}

TEST_CASE("empty and singleton edge regions") {
    Scene s0 = scene_with_blue({});
    CHECK(build_staircase2d(s0, RegionId::edge(0, +1, 2, +1)).steps.empty());
    Scene s1 = scene_with_blue({{2, 0.5, 2}});
    CHECK(build_staircase2d(s1, RegionId::edge(0, +1, 2, +1)).steps.size() == 1);
}

TEST_CASE("3d staircase keeps pairwise incomparable corners") {
    SUBCASE("dominated point dropped") {
        Scene s = scene_with_blue({{2, 2, 2}, {3, 3, 3}});
        auto st = build_staircase3d(s, RegionId::corner(+1, +1, +1));
        REQUIRE(st.corners.size() == 1);
        CHECK(s.retained[static_cast<std::size_t>(st.corners[0])] == Point3{2, 2, 2});
    }
    SUBCASE("pairwise incomparable all kept") {
        Scene s = scene_with_blue({{2, 3, 4}, {3, 4, 2}, {4, 2, 3}});
        CHECK(build_staircase3d(s, RegionId::corner(+1, +1, +1)).corners.size() == 3);
    }
    SUBCASE("empty region") {
        Scene s = scene_with_blue({});
        CHECK(build_staircase3d(s, RegionId::corner(+1, +1, +1)).corners.empty());
    }
}

TEST_CASE("staircase filters are idempotent") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Scene s = test::random_scene(seed, 2 + seed % 8, 10 + seed % 40);
        Staircases st = build_staircases(s);
        for (const Staircase2D& e : st.edges) {
            int ax1 = -1, ax2 = -1;
            for (int ax = 0; ax < 3; ++ax) {
                if (e.region.sign[ax] == 0) continue;
                (ax1 < 0 ? ax1 : ax2) = ax;
            }
            auto again = pareto_min_2d(s, e.steps, ax1, e.region.sign[ax1], ax2,
                                       e.region.sign[ax2]);
            CHECK(again == e.steps);
        }
    }
}

TEST_CASE("dominance oracle: a region point is dominated iff some step dominates it") {
    int scenes = 0;
    for (std::uint64_t seed = 0; seed < 150 && scenes < 100; ++seed) {
        Scene s = test::random_scene(seed, 1 + seed % 6, 20 + seed % 180);
        if (s.m() == 0) continue;
        ++scenes;
        Staircases st = build_staircases(s);
        for (const Staircase2D& e : st.edges) {
            const auto& full = st.full[static_cast<std::size_t>(e.region.index())];
            for (std::int32_t qi : full) {
                const Point3& q = s.retained[static_cast<std::size_t>(qi)];
                const bool on_staircase =
                    std::find(e.steps.begin(), e.steps.end(), qi) != e.steps.end();
                bool dominated_by_other_step = false;
                for (std::int32_t si : e.steps) {
                    if (si == qi) continue;
                    if (dominates_2d(s, e.region, s.retained[static_cast<std::size_t>(si)], q))
                        dominated_by_other_step = true;
                }
                if (on_staircase) {
                    // steps are never dominated by a different step except
                    // exact mapped duplicates
                    if (dominated_by_other_step) {
                        bool duplicate = false;
                        for (std::int32_t si : e.steps)
                            if (si != qi &&
                                dominates_2d(s, e.region, q,
                                             s.retained[static_cast<std::size_t>(si)]))
                                duplicate = true;
                        CHECK(duplicate);
                    }
                } else {
                    CHECK(dominated_by_other_step);
                }
            }
        }
    }
    CHECK(scenes >= 50);
}

TEST_CASE("blue-exclusion equivalence for boxes containing s_min") {
    // generic-position scenes: a box avoids a region's points iff it avoids
    // the region's staircase
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u01(0, 1);
    int checked = 0;
    for (std::uint64_t seed = 1000; seed < 1200 && checked < 4000; ++seed) {
        GenSpec gs{"uniform-annulus", 3 + seed % 6, 20 + seed % 60, seed, 4};
        Dataset ds = generate(gs);
        Scene s = build_scene(ds.red, ds.blue);
        if (s.m() == 0) continue;
        Staircases st = build_staircases(s);
        for (int t = 0; t < 20; ++t) {
            Box3 b = s.s_min;
            for (Direction d : all_directions) {
                double cap = s.s_max.bound(d);
                double v = b.bound(d) + sign_of(d) * 1.5 * u01(rng);
                if (!std::isinf(cap)) v = is_positive(d) ? std::min(v, cap) : std::max(v, cap);
                b.set_bound(d, v);
            }
            for (int rix = 0; rix < 27; ++rix) {
                RegionId r = RegionId::from_index(rix);
                if (r.off_axis_count() < 2) continue;
                bool full_hit = false, stair_hit = false;
                for (std::int32_t i : st.full[static_cast<std::size_t>(rix)])
                    full_hit |= contains_open(b, s.retained[static_cast<std::size_t>(i)]);
                for (std::int32_t i : st.elems[static_cast<std::size_t>(rix)])
                    stair_hit |= contains_open(b, s.retained[static_cast<std::size_t>(i)]);
                CHECK(full_hit == stair_hit);
                ++checked;
            }
        }
    }
    CHECK(checked >= 2000);
}

TEST_CASE("pointers equal brute-force directional scans") {
    int scenes = 0;
    for (std::uint64_t seed = 0; seed < 130 && scenes < 100; ++seed) {
        Scene s = test::random_scene(seed, 1 + seed % 5, 15 + seed % 180);
        if (s.m() == 0) continue;
        ++scenes;
        Staircases st = build_staircases(s);
        PointerTable pt = build_pointers(s, st);
        auto shares = [](RegionId a, RegionId b) {
            for (int ax = 0; ax < 3; ++ax)
                if (a.sign[ax] != 0 && a.sign[ax] == b.sign[ax]) return true;
            return false;
        };
        for (std::size_t pi = 0; pi < s.m(); ++pi) {
            const Point3& p = s.retained[pi];
            for (int rix = 0; rix < 27; ++rix) {
                RegionId r = RegionId::from_index(rix);
                if (r.off_axis_count() < 2) continue;
                if (!shares(s.region[pi], r)) continue;
                const auto& elems = st.elems[static_cast<std::size_t>(rix)];
                for (Direction d : all_directions) {
                    auto got = pt.lookup(static_cast<std::int32_t>(pi), r, d);
                    // brute-force directional scan over the staircase
                    const int a = axis_of(d);
                    std::optional<std::int32_t> want;  // position in elems
                    for (std::size_t e = 0; e < elems.size(); ++e) {
                        const Point3& q = s.retained[static_cast<std::size_t>(elems[e])];
                        const bool beyond = is_positive(d) ? q[a] > p[a] : q[a] < p[a];
                        if (!beyond) continue;
                        if (!want) {
                            want = static_cast<std::int32_t>(e);
                            continue;
                        }
                        const Point3& w =
                            s.retained[static_cast<std::size_t>(elems[static_cast<std::size_t>(*want)])];
                        const bool closer = is_positive(d) ? q[a] < w[a] : q[a] > w[a];
                        const bool tie_lower =
                            q[a] == w[a] && elems[e] < elems[static_cast<std::size_t>(*want)];
                        if (closer || tie_lower) want = static_cast<std::int32_t>(e);
                    }
                    CHECK(got == want);
                }
            }
        }
    }
    CHECK(scenes >= 60);
}

TEST_CASE("pointers for empty staircase are absent") {
    Scene s = scene_with_blue({{2, 2, 2}});
    Staircases st = build_staircases(s);
    PointerTable pt = build_pointers(s, st);
    // the (+,+,+) corner holds the lone point; the opposite corner is empty
    for (Direction d : all_directions)
        CHECK_FALSE(pt.lookup(0, RegionId::corner(-1, -1, -1), d).has_value());
}
