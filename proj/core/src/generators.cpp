#include "mbsb/generators.hpp"

#include <random>

#include "mbsb/errors.hpp"
#include "mbsb/scene.hpp"

namespace mbsb {

namespace {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    double u01() { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Dataset uniform_annulus(const GenSpec& s) {
    Rng rng(s.seed);
    Dataset ds;
    for (std::size_t i = 0; i < s.n; ++i)
        ds.red.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    for (std::size_t i = 0; i < s.m; ++i) {
        while (true) {
            Point3 p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
            if (p.x > -1 && p.x < 1 && p.y > -1 && p.y < 1 && p.z > -1 && p.z < 1) continue;
            ds.blue.push_back(p);
            break;
        }
    }
    return ds;
}

Dataset clustered_corners(const GenSpec& s) {
    Rng rng(s.seed);
    Dataset ds;
    for (std::size_t i = 0; i < s.n; ++i)
        ds.red.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    for (std::size_t i = 0; i < s.m; ++i) {
        const std::uint64_t corner = rng.g() & 7u;
        Point3 p;
        for (int a = 0; a < 3; ++a) {
            const double sgn = (corner >> a) & 1u ? +1.0 : -1.0;
            p[a] = sgn * (1.1 + 0.8 * rng.u01());
        }
        ds.blue.push_back(p);
    }
    return ds;
}

Dataset grid_degenerate(const GenSpec& s) {
    if (s.grid < 2) throw invalid_parameters("grid-degenerate: grid must be >= 2");
    Rng rng(s.seed);
    Dataset ds;
    const std::int64_t g = s.grid;
    for (std::size_t i = 0; i < s.n; ++i)
        ds.red.push_back({static_cast<double>(rng.uniform_int(0, g - 1)),
                          static_cast<double>(rng.uniform_int(0, g - 1)),
                          static_cast<double>(rng.uniform_int(0, g - 1))});
    for (std::size_t i = 0; i < s.m; ++i)
        ds.blue.push_back({static_cast<double>(rng.uniform_int(-2, g + 1)),
                           static_cast<double>(rng.uniform_int(-2, g + 1)),
                           static_cast<double>(rng.uniform_int(-2, g + 1))});
    return ds;
}

Dataset sparse_blockers(const GenSpec& s) {
    if (s.m < 6) throw invalid_parameters("sparse-blockers: m must be >= 6");
    if (s.n == 0) throw invalid_parameters("sparse-blockers: n must be >= 1");
    Rng rng(s.seed);
    Dataset ds;
    for (std::size_t i = 0; i < s.n; ++i)
        ds.red.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    Box3 bbox = compute_smin(ds.red);
    Point3 center{(bbox.lo[0] + bbox.hi[0]) / 2, (bbox.lo[1] + bbox.hi[1]) / 2,
                  (bbox.lo[2] + bbox.hi[2]) / 2};

    // one corridor blocker per direction pins every s_max bound
    for (Direction d : all_directions) {
        Point3 p = center;
        const int a = axis_of(d);
        p[a] = bbox.bound(d) + sign_of(d) * (2.5 + 0.5 * rng.u01());
        ds.blue.push_back(p);
    }
    // remaining blue points live in the shell and stay out of all six
    // corridors, so the planted bounds are exactly s_max
    auto in_corridor = [&](const Point3& p) {
        for (Direction d : all_directions) {
            const int a = axis_of(d), b = (a + 1) % 3, c = (a + 2) % 3;
            if (p[b] < bbox.lo[b] || p[b] > bbox.hi[b]) continue;
            if (p[c] < bbox.lo[c] || p[c] > bbox.hi[c]) continue;
            if (is_positive(d) ? p[a] >= bbox.hi[a] : p[a] <= bbox.lo[a]) return true;
        }
        return false;
    };
    for (std::size_t i = 6; i < s.m; ++i) {
        while (true) {
            Point3 p{rng.uniform(bbox.lo[0] - 2.4, bbox.hi[0] + 2.4),
                     rng.uniform(bbox.lo[1] - 2.4, bbox.hi[1] + 2.4),
                     rng.uniform(bbox.lo[2] - 2.4, bbox.hi[2] + 2.4)};
            if (contains_open(bbox, p) || in_corridor(p)) continue;
            ds.blue.push_back(p);
            break;
        }
    }
    return ds;
}

}  // namespace

Dataset generate(const GenSpec& spec) {
    Dataset ds;
    if (spec.generator == "uniform-annulus") ds = uniform_annulus(spec);
    else if (spec.generator == "clustered-corners") ds = clustered_corners(spec);
    else if (spec.generator == "grid-degenerate") ds = grid_degenerate(spec);
    else if (spec.generator == "sparse-blockers") ds = sparse_blockers(spec);
    else throw unknown_generator(spec.generator);

    DatasetMeta meta;
    meta.generator = spec.generator;
    meta.seed = spec.seed;
    meta.params["n"] = static_cast<double>(spec.n);
    meta.params["m"] = static_cast<double>(spec.m);
    if (spec.generator == "grid-degenerate") meta.params["grid"] = spec.grid;
    ds.meta = meta;
    return ds;
}

}  // namespace mbsb
