#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mbsb/scene.hpp"

namespace mbsb {

/// Signed distance of p beyond the s_min face plane on the given axis/sign;
/// positive inside the region on that side.
inline double mapped_dist(const Box3& s_min, const Point3& p, int axis, int sign) {
    return sign > 0 ? p[axis] - s_min.hi[axis] : s_min.lo[axis] - p[axis];
}

/// Dominance-minimal retained points of an edge region, sorted by the first
/// signed axis (mapped, ascending) with the second strictly descending.
/// Dominated points impose no constraint on any box containing s_min.
struct Staircase2D {
    RegionId region;
    std::vector<std::int32_t> steps;  // indices into Scene::retained
};

/// Dominance-minimal retained points of a corner region under the 3-axis
/// mapping toward s_min.
struct Staircase3D {
    RegionId region;
    std::vector<std::int32_t> corners;  // indices into Scene::retained
};

Staircase2D build_staircase2d(const Scene& scene, RegionId edge_region);
Staircase3D build_staircase3d(const Scene& scene, RegionId corner_region);

/// 2D dominance filter over arbitrary retained indices in mapped coordinates
/// (axis_a ascending, axis_b strictly descending). Used for edge staircases
/// and for projections of corner staircases onto two of their axes.
std::vector<std::int32_t> pareto_min_2d(const Scene& scene, const std::vector<std::int32_t>& pts,
                                        int axis_a, int sign_a, int axis_b, int sign_b);

/// All 20 region staircases plus per-axis sorted views of each.
///
/// Blue-exclusion equivalence (a box containing s_min avoids a region's
/// points iff it avoids the region's staircase) relies on strict dominance
/// witnesses; it can fail for edge regions when a point's free-axis
/// coordinate ties an s_min bound exactly. Those regions are flagged and
/// queried through their full point lists instead.
struct Staircases {
    std::vector<Staircase2D> edges;    // 12, in all_edge_regions() order
    std::vector<Staircase3D> corners;  // 8, in all_corner_regions() order
    std::array<std::int8_t, 27> slot{};  // region index -> slot in edges/corners, -1 otherwise
    std::array<std::vector<std::int32_t>, 27> elems;  // canonical staircase order per region
    std::array<std::array<std::vector<std::int32_t>, 3>, 27> by_axis;  // sorted by raw coord, ties by index
    std::array<std::vector<std::int32_t>, 27> full;  // every retained point of the region
    std::array<std::array<std::vector<std::int32_t>, 3>, 27> full_by_axis;
    std::array<bool, 27> hazard{};  // free-axis tie with an s_min bound in this region

    const std::vector<std::int32_t>& elems_of(RegionId r) const { return elems[static_cast<std::size_t>(r.index())]; }
    const std::vector<std::int32_t>& axis_order(RegionId r, int axis) const {
        return by_axis[static_cast<std::size_t>(r.index())][static_cast<std::size_t>(axis)];
    }
    /// Exact query view: staircase when pruning is safe, full list otherwise.
    const std::vector<std::int32_t>& query_order(int region_index, int axis) const {
        const auto rix = static_cast<std::size_t>(region_index);
        return hazard[rix] ? full_by_axis[rix][static_cast<std::size_t>(axis)]
                           : by_axis[rix][static_cast<std::size_t>(axis)];
    }
};

Staircases build_staircases(const Scene& scene);

/// Directional nearest-staircase-element pointers of §-style candidate
/// assembly: for a retained point p, a region R and a direction d, the
/// staircase element of R nearest to p strictly beyond p in direction d
/// (e.g. direction top: lowest element strictly above p). Materialized only
/// for (point, region) combinations the case enumerations query, namely
/// regions sharing at least one halfspace with the point's own region
/// (its own region included):
///
///   point region | materialized regions
///   -------------+--------------------------------------------------
///   edge (a,b)   | all edge/corner regions with sign a or sign b
///   corner (a,b,c)| all edge/corner regions with sign a, b or c
///
/// Pointers are built once per Scene and never updated.
struct PointerTable {
    static constexpr std::int32_t absent = -1;
    static constexpr std::int32_t not_materialized = -2;

    // ptr[region_index][direction][point] = position in Staircases::elems_of(region)
    std::array<std::array<std::vector<std::int32_t>, 6>, 27> ptr;

    /// Position in the region's canonical staircase list, or nullopt when no
    /// element lies strictly beyond p in that direction. Throws if the
    /// combination is not materialized.
    std::optional<std::int32_t> lookup(std::int32_t point, RegionId region, Direction d) const;
};

PointerTable build_pointers(const Scene& scene, const Staircases& stairs);

}  // namespace mbsb
