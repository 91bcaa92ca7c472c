#include "mbsb/scene.hpp"

#include <algorithm>
#include <numeric>

#include "mbsb/errors.hpp"

namespace mbsb {

std::vector<RegionId> all_corner_regions() {
    std::vector<RegionId> out;
    for (int sx : {-1, +1})
        for (int sy : {-1, +1})
            for (int sz : {-1, +1}) out.push_back(RegionId::corner(sx, sy, sz));
    return out;
}

std::vector<RegionId> all_edge_regions() {
    std::vector<RegionId> out;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int sa : {-1, +1})
                for (int sb : {-1, +1}) out.push_back(RegionId::edge(a, sa, b, sb));
    return out;
}

std::vector<Direction> Scene::unbounded_directions() const {
    std::vector<Direction> dirs;
    for (Direction d : all_directions)
        if (std::isinf(s_max.bound(d))) dirs.push_back(d);
    return dirs;
}

Box3 compute_smin(std::span<const Point3> red) {
    if (red.empty()) throw empty_red_set{};
    Box3 b{{inf, inf, inf}, {-inf, -inf, -inf}};
    for (const Point3& p : red) {
        if (!p.finite()) throw non_finite_input{};
        for (int a = 0; a < 3; ++a) {
            b.lo[a] = std::min(b.lo[a], p[a]);
            b.hi[a] = std::max(b.hi[a], p[a]);
        }
    }
    return b;
}

Box3 compute_smax(const Box3& s_min, std::span<const Point3> blue) {
    Box3 out = Box3::everything();
    for (const Point3& p : blue) {
        for (Direction d : all_directions) {
            const int a = axis_of(d);
            const int b = (a + 1) % 3, c = (a + 2) % 3;
            // Corridor: projection within the closed face rectangle, point at
            // or beyond the face.
            if (p[b] < s_min.lo[b] || p[b] > s_min.hi[b]) continue;
            if (p[c] < s_min.lo[c] || p[c] > s_min.hi[c]) continue;
            if (is_positive(d)) {
                if (p[a] >= s_min.hi[a]) out.hi[a] = std::min(out.hi[a], p[a]);
            } else {
                if (p[a] <= s_min.lo[a]) out.lo[a] = std::max(out.lo[a], p[a]);
            }
        }
    }
    return out;
}

RegionId classify(const Box3& s_min, const Box3& s_max, const Point3& p) {
    if (!contains_open(s_max, p) || contains_open(s_min, p)) throw not_in_annulus{};
    RegionId r;
    for (int a = 0; a < 3; ++a) {
        if (p[a] < s_min.lo[a]) r.sign[a] = -1;
        else if (p[a] > s_min.hi[a]) r.sign[a] = +1;
    }
    if (r.off_axis_count() == 0) throw not_in_annulus{};  // on the s_min boundary
    return r;
}

Scene build_scene(std::span<const Point3> red, std::span<const Point3> blue) {
    for (const Point3& p : blue)
        if (!p.finite()) throw non_finite_input{};

    Scene s;
    s.s_min = compute_smin(red);
    s.s_max = compute_smax(s.s_min, blue);

    for (const Point3& p : blue) {
        if (contains_open(s.s_min, p)) {
            ++s.discarded_inside;
        } else if (!contains_open(s.s_max, p)) {
            ++s.discarded_outside;
        } else {
            s.retained.push_back(p);
        }
    }
    std::sort(s.retained.begin(), s.retained.end());

    s.region.reserve(s.retained.size());
    for (const Point3& p : s.retained) s.region.push_back(classify(s.s_min, s.s_max, p));

    for (int a = 0; a < 3; ++a) {
        auto& ord = s.order[a];
        ord.resize(s.retained.size());
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(), [&](std::int32_t i, std::int32_t j) {
            return s.retained[static_cast<std::size_t>(i)][a] <
                   s.retained[static_cast<std::size_t>(j)][a];
        });
    }
    return s;
}

}  // namespace mbsb
