#include "mbsb/staircase.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "mbsb/errors.hpp"

namespace mbsb {

namespace {

std::vector<std::int32_t> region_points(const Scene& scene, RegionId r) {
    std::vector<std::int32_t> out;
    for (std::size_t i = 0; i < scene.retained.size(); ++i)
        if (scene.region[i] == r) out.push_back(static_cast<std::int32_t>(i));
    return out;
}

/// First signed axis of an edge region (lowest axis number).
std::pair<int, int> edge_axes(RegionId r) {
    int first = -1, second = -1;
    for (int a = 0; a < 3; ++a) {
        if (r.sign[a] == 0) continue;
        if (first < 0) first = a;
        else second = a;
    }
    return {first, second};
}

}  // namespace

std::vector<std::int32_t> pareto_min_2d(const Scene& scene, const std::vector<std::int32_t>& pts,
                                        int axis_a, int sign_a, int axis_b, int sign_b) {
    struct Entry {
        double da, db;
        std::int32_t idx;
    };
    std::vector<Entry> es;
    es.reserve(pts.size());
    for (std::int32_t i : pts) {
        const Point3& p = scene.retained[static_cast<std::size_t>(i)];
        es.push_back({mapped_dist(scene.s_min, p, axis_a, sign_a),
                      mapped_dist(scene.s_min, p, axis_b, sign_b), i});
    }
    std::sort(es.begin(), es.end(), [](const Entry& l, const Entry& r) {
        if (l.da != r.da) return l.da < r.da;
        if (l.db != r.db) return l.db < r.db;
        return l.idx < r.idx;
    });
    std::vector<std::int32_t> out;
    double best_db = inf;
    for (const Entry& e : es) {
        if (e.db < best_db) {
            out.push_back(e.idx);
            best_db = e.db;
        }
    }
    return out;
}

Staircase2D build_staircase2d(const Scene& scene, RegionId edge_region) {
    if (!edge_region.is_edge()) throw std::invalid_argument("build_staircase2d: not an edge region");
    auto [a, b] = edge_axes(edge_region);
    Staircase2D st;
    st.region = edge_region;
    st.steps = pareto_min_2d(scene, region_points(scene, edge_region), a, edge_region.sign[a], b,
                             edge_region.sign[b]);
    return st;
}

Staircase3D build_staircase3d(const Scene& scene, RegionId corner_region) {
    if (!corner_region.is_corner())
        throw std::invalid_argument("build_staircase3d: not a corner region");
    struct Entry {
        std::array<double, 3> d;
        std::int32_t idx;
    };
    std::vector<Entry> es;
    for (std::int32_t i : region_points(scene, corner_region)) {
        const Point3& p = scene.retained[static_cast<std::size_t>(i)];
        es.push_back({{mapped_dist(scene.s_min, p, 0, corner_region.sign[0]),
                       mapped_dist(scene.s_min, p, 1, corner_region.sign[1]),
                       mapped_dist(scene.s_min, p, 2, corner_region.sign[2])},
                      i});
    }
    std::sort(es.begin(), es.end(), [](const Entry& l, const Entry& r) {
        if (l.d != r.d) return l.d < r.d;
        return l.idx < r.idx;
    });
    Staircase3D st;
    st.region = corner_region;
    std::vector<Entry> kept;
    for (const Entry& e : es) {
        bool dominated = false;
        for (const Entry& k : kept) {
            if (k.d[0] <= e.d[0] && k.d[1] <= e.d[1] && k.d[2] <= e.d[2]) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            kept.push_back(e);
            st.corners.push_back(e.idx);
        }
    }
    return st;
}

Staircases build_staircases(const Scene& scene) {
    Staircases s;
    s.slot.fill(-1);
    const auto edges = all_edge_regions();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        s.edges.push_back(build_staircase2d(scene, edges[i]));
        s.slot[static_cast<std::size_t>(edges[i].index())] = static_cast<std::int8_t>(i);
        s.elems[static_cast<std::size_t>(edges[i].index())] = s.edges.back().steps;
    }
    const auto corners = all_corner_regions();
    for (std::size_t i = 0; i < corners.size(); ++i) {
        s.corners.push_back(build_staircase3d(scene, corners[i]));
        s.slot[static_cast<std::size_t>(corners[i].index())] = static_cast<std::int8_t>(i);
        s.elems[static_cast<std::size_t>(corners[i].index())] = s.corners.back().corners;
    }
    for (std::size_t i = 0; i < scene.retained.size(); ++i)
        s.full[static_cast<std::size_t>(scene.region[i].index())].push_back(
            static_cast<std::int32_t>(i));

    auto axis_sort = [&](std::vector<std::int32_t> v, int a) {
        std::sort(v.begin(), v.end(), [&](std::int32_t l, std::int32_t r) {
            double cl = scene.retained[static_cast<std::size_t>(l)][a];
            double cr = scene.retained[static_cast<std::size_t>(r)][a];
            if (cl != cr) return cl < cr;
            return l < r;
        });
        return v;
    };

    for (int rix = 0; rix < 27; ++rix) {
        const RegionId region = RegionId::from_index(rix);
        const auto& fl = s.full[static_cast<std::size_t>(rix)];
        if (fl.empty()) continue;
        for (int a = 0; a < 3; ++a) {
            s.by_axis[static_cast<std::size_t>(rix)][static_cast<std::size_t>(a)] =
                axis_sort(s.elems[static_cast<std::size_t>(rix)], a);
            s.full_by_axis[static_cast<std::size_t>(rix)][static_cast<std::size_t>(a)] =
                axis_sort(fl, a);
        }
        if (region.is_edge()) {
            for (std::int32_t i : fl) {
                const Point3& p = scene.retained[static_cast<std::size_t>(i)];
                for (int a = 0; a < 3; ++a) {
                    if (region.sign[a] != 0) continue;
                    if (p[a] == scene.s_min.lo[a] || p[a] == scene.s_min.hi[a])
                        s.hazard[static_cast<std::size_t>(rix)] = true;
                }
            }
        }
    }
    return s;
}

std::optional<std::int32_t> PointerTable::lookup(std::int32_t point, RegionId region,
                                                 Direction d) const {
    const auto& v = ptr[static_cast<std::size_t>(region.index())][static_cast<std::size_t>(
        static_cast<int>(d))];
    if (v.empty()) return std::nullopt;  // empty staircase: all pointers absent
    std::int32_t e = v[static_cast<std::size_t>(point)];
    if (e == not_materialized)
        throw std::logic_error("pointer not materialized for this point/region");
    if (e == absent) return std::nullopt;
    return e;
}

PointerTable build_pointers(const Scene& scene, const Staircases& stairs) {
    PointerTable t;
    const std::size_t m = scene.retained.size();

    // Region pairs sharing a halfspace: some axis where both signs are equal
    // and nonzero.
    auto shares_halfspace = [](RegionId a, RegionId b) {
        for (int ax = 0; ax < 3; ++ax)
            if (a.sign[ax] != 0 && a.sign[ax] == b.sign[ax]) return true;
        return false;
    };

    for (int rix = 0; rix < 27; ++rix) {
        RegionId region = RegionId::from_index(rix);
        if (region.off_axis_count() < 2) continue;
        const auto& elems = stairs.elems[static_cast<std::size_t>(rix)];
        if (elems.empty()) continue;

        std::unordered_map<std::int32_t, std::int32_t> canon;
        canon.reserve(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i)
            canon[elems[i]] = static_cast<std::int32_t>(i);

        for (Direction d : all_directions) {
            const int a = axis_of(d);
            const auto& stair_sorted =
                stairs.by_axis[static_cast<std::size_t>(rix)][static_cast<std::size_t>(a)];
            auto coord = [&](std::size_t k) {
                return scene.retained[static_cast<std::size_t>(stair_sorted[k])][a];
            };

            auto& out = t.ptr[static_cast<std::size_t>(rix)][static_cast<std::size_t>(
                static_cast<int>(d))];
            out.assign(m, PointerTable::not_materialized);

            // Merge points (sorted by axis a) against the staircase (same
            // sort). Ties between equal-coordinate elements resolve to the
            // smallest retained index.
            const auto& pts_sorted = scene.order[static_cast<std::size_t>(a)];
            std::size_t k = 0;
            for (std::size_t pi = 0; pi < m; ++pi) {
                std::int32_t p = pts_sorted[pi];
                if (!shares_halfspace(scene.region[static_cast<std::size_t>(p)], region))
                    continue;
                double c = scene.retained[static_cast<std::size_t>(p)][a];
                if (is_positive(d)) {
                    while (k < stair_sorted.size() && coord(k) <= c) ++k;
                    out[static_cast<std::size_t>(p)] =
                        k < stair_sorted.size() ? canon[stair_sorted[k]] : PointerTable::absent;
                } else {
                    while (k < stair_sorted.size() && coord(k) < c) ++k;
                    if (k == 0) {
                        out[static_cast<std::size_t>(p)] = PointerTable::absent;
                    } else {
                        std::size_t j = k - 1;
                        while (j > 0 && coord(j - 1) == coord(j)) --j;
                        out[static_cast<std::size_t>(p)] = canon[stair_sorted[j]];
                    }
                }
            }
        }
    }
    return t;
}

}  // namespace mbsb
