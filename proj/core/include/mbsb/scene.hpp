#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mbsb/geom.hpp"

namespace mbsb {

/// One of the 26 regions the planes of s_min cut interior(s_max) into:
/// per axis, -1 below s_min, +1 above, 0 within its closed slab.
/// Three nonzero signs name a corner region, two an edge region, one a side
/// region. Points of the closed s_min box itself (all zeros) belong to none.
struct RegionId {
    std::array<std::int8_t, 3> sign{0, 0, 0};

    int off_axis_count() const {
        return (sign[0] != 0) + (sign[1] != 0) + (sign[2] != 0);
    }
    bool is_corner() const { return off_axis_count() == 3; }
    bool is_edge() const { return off_axis_count() == 2; }
    bool is_side() const { return off_axis_count() == 1; }

    static RegionId corner(int sx, int sy, int sz) {
        return RegionId{{static_cast<std::int8_t>(sx), static_cast<std::int8_t>(sy),
                         static_cast<std::int8_t>(sz)}};
    }
    /// Edge region spanning the two signed axes; the third sign is 0.
    static RegionId edge(int axis_a, int sign_a, int axis_b, int sign_b) {
        RegionId r;
        r.sign[axis_a] = static_cast<std::int8_t>(sign_a);
        r.sign[axis_b] = static_cast<std::int8_t>(sign_b);
        return r;
    }
    static RegionId side(Direction d) {
        RegionId r;
        r.sign[axis_of(d)] = static_cast<std::int8_t>(sign_of(d));
        return r;
    }

    /// Dense index in [0, 27): base-3 digits (sign+1) per axis. Index 13 is
    /// the all-zero (inside s_min) value, unused for retained points.
    int index() const {
        return (sign[0] + 1) + 3 * (sign[1] + 1) + 9 * (sign[2] + 1);
    }
    static RegionId from_index(int idx) {
        RegionId r;
        r.sign[0] = static_cast<std::int8_t>(idx % 3 - 1);
        r.sign[1] = static_cast<std::int8_t>((idx / 3) % 3 - 1);
        r.sign[2] = static_cast<std::int8_t>((idx / 9) % 3 - 1);
        return r;
    }

    /// True if the region lies in the halfspace beyond the s_min face in
    /// direction d (all its points are strictly beyond that plane).
    bool in_halfspace(Direction d) const { return sign[axis_of(d)] == sign_of(d); }

    friend bool operator==(const RegionId&, const RegionId&) = default;
};

std::vector<RegionId> all_corner_regions();
std::vector<RegionId> all_edge_regions();

/// A halfspace of s_min, identified by the outward face direction bounding
/// it. Two halfspaces are perpendicular iff their directions lie on
/// different axes.
struct Halfspace {
    Direction face;
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};
inline bool perpendicular(Halfspace a, Halfspace b) { return axis_of(a.face) != axis_of(b.face); }

/// Immutable preprocessed instance: s_min, s_max, the retained blue points
/// (strictly inside s_max, not strictly inside s_min) classified by region,
/// discard counts, and per-axis sorted index arrays.
struct Scene {
    Box3 s_min;
    Box3 s_max;
    std::vector<Point3> retained;       // sorted by (x, y, z)
    std::vector<RegionId> region;       // parallel to retained
    std::size_t discarded_inside = 0;   // strictly inside s_min
    std::size_t discarded_outside = 0;  // on or outside s_max
    std::array<std::vector<std::int32_t>, 3> order;  // per-axis sorted indices

    std::size_t m() const { return retained.size(); }
    bool bounded() const {
        for (int a = 0; a < 3; ++a)
            if (std::isinf(s_max.lo[a]) || std::isinf(s_max.hi[a])) return false;
        return true;
    }
    std::vector<Direction> unbounded_directions() const;
};

/// Smallest box enclosing all red points. Throws empty_red_set /
/// non_finite_input.
Box3 compute_smin(std::span<const Point3> red);

/// s_min extended outward per direction until the extension corridor (the
/// closed face rectangle swept outward) hits a blue point; infinite where it
/// never does. Blue points on a face of s_min clamp the bound at distance 0.
Box3 compute_smax(const Box3& s_min, std::span<const Point3> blue);

/// Region of a point strictly inside s_max and not strictly inside s_min.
/// Ties on a face plane resolve toward the lower-dimensional region (the
/// per-axis "within" test is closed). Throws not_in_annulus.
RegionId classify(const Box3& s_min, const Box3& s_max, const Point3& p);

Scene build_scene(std::span<const Point3> red, std::span<const Point3> blue);

}  // namespace mbsb
