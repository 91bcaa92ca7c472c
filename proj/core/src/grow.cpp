#include <algorithm>

#include "mbsb/candidates.hpp"
#include "mbsb/errors.hpp"

namespace mbsb {

const char* case_label_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::case1: return "case1";
        case CaseLabel::case2: return "case2";
        case CaseLabel::case3: return "case3";
        case CaseLabel::case4: return "case4";
        case CaseLabel::case5: return "case5";
        case CaseLabel::case6: return "case6";
        case CaseLabel::case7: return "case7";
        case CaseLabel::case8: return "case8";
        case CaseLabel::trivial: return "trivial";
        case CaseLabel::supplementary: return "supplementary";
        case CaseLabel::oracle: return "oracle";
    }
    return "?";
}

namespace {

/// Strictly inside the box's cross-section perpendicular to axis a.
inline bool in_cross_section(const Box3& box, const Point3& q, int a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    return q[b] > box.lo[b] && q[b] < box.hi[b] && q[c] > box.lo[c] && q[c] < box.hi[c];
}

}  // namespace

GrowResult grow_reference(const Scene& scene, const Box3& box, Direction d) {
    const int a = axis_of(d);
    const bool pos = is_positive(d);
    const double cur = box.bound(d);

    double best = pos ? scene.s_max.hi[a] : scene.s_max.lo[a];
    Support sup = std::isinf(best) ? Support::none() : Support::smax();

    for (std::size_t i = 0; i < scene.retained.size(); ++i) {
        const Point3& q = scene.retained[i];
        if (!in_cross_section(box, q, a)) continue;
        if (pos) {
            if (q[a] < cur || q[a] >= best) continue;
        } else {
            if (q[a] > cur || q[a] <= best) continue;
        }
        best = q[a];
        sup = Support::blue(static_cast<std::int32_t>(i));
    }
    return {best, sup};
}

GrowResult grow_fast(const Scene& scene, const Staircases& stairs, const Box3& box, Direction d) {
    const int a = axis_of(d);
    const bool pos = is_positive(d);
    const double cur = box.bound(d);

    double best = pos ? scene.s_max.hi[a] : scene.s_max.lo[a];
    Support sup = std::isinf(best) ? Support::none() : Support::smax();
    const int sigma = pos ? +1 : -1;

    auto coord_of = [&](std::int32_t i) { return scene.retained[static_cast<std::size_t>(i)][a]; };

    // Better candidate: closer along the growth direction, tie on smaller index.
    auto improves = [&](double c, std::int32_t i) {
        if (sup.kind != Support::Kind::blue_point) return pos ? c < best : c > best;
        if (c != best) return pos ? c < best : c > best;
        return i < sup.point;
    };

    auto scan_region = [&](int rix) {
        const auto& ord = stairs.query_order(rix, a);
        if (ord.empty()) return;
        // First position at or beyond the current face.
        auto it = std::lower_bound(ord.begin(), ord.end(), cur, [&](std::int32_t i, double v) {
            return pos ? coord_of(i) < v : false;
        });
        if (!pos) {
            // scan downward: start from the last element with coord <= cur
            auto rit = std::upper_bound(ord.begin(), ord.end(), cur,
                                        [&](double v, std::int32_t i) { return v < coord_of(i); });
            std::size_t k = static_cast<std::size_t>(rit - ord.begin());
            while (k > 0) {
                --k;
                const std::int32_t i = ord[k];
                const double c = coord_of(i);
                if (sup.kind == Support::Kind::blue_point && c < best) break;
                if (c < best) break;
                if (!in_cross_section(box, scene.retained[static_cast<std::size_t>(i)], a))
                    continue;
                if (improves(c, i)) {
                    best = c;
                    sup = Support::blue(i);
                }
            }
            return;
        }
        for (auto p = it; p != ord.end(); ++p) {
            const std::int32_t i = *p;
            const double c = coord_of(i);
            if (c > best) break;
            if (c == best && sup.kind == Support::Kind::blue_point && i > sup.point) break;
            if (!in_cross_section(box, scene.retained[static_cast<std::size_t>(i)], a)) continue;
            if (improves(c, i)) {
                best = c;
                sup = Support::blue(i);
            }
        }
    };

    // Regions strictly beyond the face plane on this axis.
    for (int rix = 0; rix < 27; ++rix) {
        RegionId r = RegionId::from_index(rix);
        if (r.off_axis_count() < 2) continue;
        if (r.sign[a] == sigma) {
            scan_region(rix);
        } else if (r.sign[a] == 0) {
            // Edge regions on the other two axes hold zero-growth blockers
            // only when the face is still flush with s_min.
            const double face = pos ? scene.s_min.hi[a] : scene.s_min.lo[a];
            if (cur == face) scan_region(rix);
        }
    }
    return {best, sup};
}

bool open_interior_free(const Scene& scene, const Staircases& stairs, const Box3& box) {
    for (int rix = 0; rix < 27; ++rix) {
        RegionId r = RegionId::from_index(rix);
        if (r.off_axis_count() < 2) continue;
        const auto& ord = stairs.query_order(rix, 0);
        if (ord.empty()) continue;
        auto coord_of = [&](std::int32_t i) {
            return scene.retained[static_cast<std::size_t>(i)][0];
        };
        auto it = std::upper_bound(ord.begin(), ord.end(), box.lo[0],
                                   [&](double v, std::int32_t i) { return v < coord_of(i); });
        for (auto p = it; p != ord.end(); ++p) {
            const Point3& q = scene.retained[static_cast<std::size_t>(*p)];
            if (q.x >= box.hi[0]) break;
            if (contains_open(box, q)) return false;
        }
    }
    return true;
}

CandidateBox complete(const GrowthEngine& eng, Box3 partial, std::span<const Direction> order,
                      CaseLabel label) {
    for (Direction d : order) {
        GrowResult g = eng.grow(partial, d);
        if (g.support.kind == Support::Kind::unbounded) throw unbounded_result{};
        partial.set_bound(d, g.bound);
    }
    CandidateBox cb;
    cb.box = partial;
    cb.label = label;
    for (Direction d : all_directions) cb.support(d) = eng.grow(partial, d).support;
    return cb;
}

std::optional<CandidateBox> certify(const GrowthEngine& eng, const Box3& box, CaseLabel label,
                                    bool check_empty) {
    const Scene& scene = *eng.scene;
    if (!box.valid()) return std::nullopt;
    if (!box.contains_box(scene.s_min) || !scene.s_max.contains_box(box)) return std::nullopt;
    if (check_empty && !open_interior_free(scene, *eng.stairs, box)) return std::nullopt;

    CandidateBox cb;
    cb.box = box;
    cb.label = label;
    for (Direction d : all_directions) {
        GrowResult g = eng.grow(box, d);
        if (g.bound != box.bound(d)) return std::nullopt;
        cb.support(d) = g.support;
    }
    return cb;
}

std::optional<CandidateBox> trivial_candidate(const GrowthEngine& eng) {
    static constexpr std::array<Direction, 6> order = {
        Direction::front, Direction::left,   Direction::back,
        Direction::right, Direction::bottom, Direction::top,
    };
    try {
        return complete(eng, eng.scene->s_min, order, CaseLabel::trivial);
    } catch (const unbounded_result&) {
        return std::nullopt;
    }
}

namespace {

struct SupportProfile {
    // per support slot: region of the blue point, or nullopt
    std::array<std::optional<RegionId>, 6> region;

    int halfspace_count(Direction h) const {
        int n = 0;
        for (const auto& r : region)
            if (r && r->in_halfspace(h)) ++n;
        return n;
    }
    int both_count(Direction h, Direction p) const {
        int n = 0;
        for (const auto& r : region)
            if (r && r->in_halfspace(h) && r->in_halfspace(p)) ++n;
        return n;
    }
    int region_count(RegionId target) const {
        int n = 0;
        for (const auto& r : region)
            if (r && *r == target) ++n;
        return n;
    }
};

SupportProfile profile_of(const Scene& scene, const CandidateBox& cb) {
    SupportProfile pr;
    for (int i = 0; i < 6; ++i) {
        const Support& s = cb.supports[static_cast<std::size_t>(i)];
        if (s.kind == Support::Kind::blue_point)
            pr.region[static_cast<std::size_t>(i)] = scene.region[static_cast<std::size_t>(s.point)];
    }
    return pr;
}

}  // namespace

bool universal_support_constraints(const Scene& scene, const CandidateBox& cb) {
    SupportProfile pr = profile_of(scene, cb);
    for (Direction h : all_directions)
        if (pr.halfspace_count(h) > 5) return false;
    for (RegionId c : all_corner_regions())
        if (pr.region_count(c) > 3) return false;
    return true;
}

bool matches_case_pattern(const Scene& scene, const CandidateBox& cb, int case_k) {
    SupportProfile pr = profile_of(scene, cb);

    auto perpendicular_pairs = [&](auto&& fn) {
        for (Direction h : all_directions)
            for (Direction p : all_directions)
                if (axis_of(h) != axis_of(p) && fn(h, p)) return true;
        return false;
    };

    switch (case_k) {
        case 1:
            return perpendicular_pairs([&](Direction h, Direction p) {
                return pr.halfspace_count(h) == 5 && pr.both_count(h, p) == 4;
            });
        case 2:
            return perpendicular_pairs([&](Direction h, Direction p) {
                return pr.halfspace_count(h) == 5 && pr.both_count(h, p) == 3;
            });
        case 3:
            return perpendicular_pairs([&](Direction h, Direction p) {
                if (pr.halfspace_count(h) != 5 || pr.both_count(h, p) != 2) return false;
                // at least one support in an edge region of H - H_perp
                // adjacent to a corner region within H_perp
                for (const auto& r : pr.region) {
                    if (!r || !r->is_edge()) continue;
                    if (r->sign[axis_of(h)] == sign_of(h) && r->sign[axis_of(p)] == 0) return true;
                }
                return false;
            });
        case 4:
            for (Direction h : all_directions) {
                if (pr.halfspace_count(h) != 5) continue;
                for (int g = 0; g < 3; ++g) {
                    if (g == axis_of(h)) continue;
                    RegionId e1 = RegionId::edge(axis_of(h), sign_of(h), g, +1);
                    RegionId e2 = RegionId::edge(axis_of(h), sign_of(h), g, -1);
                    int n1 = 0, n2 = 0;
                    for (const auto& r : pr.region) {
                        if (!r) continue;
                        if (*r == e1) ++n1;
                        if (*r == e2) ++n2;
                    }
                    if (n1 + n2 == 3 && n1 >= 1 && n2 >= 1) return true;
                }
            }
            return false;
        case 5:
            return perpendicular_pairs([&](Direction h, Direction p) {
                if (pr.halfspace_count(h) != 4) return false;
                int in_h_not_p = 0;
                for (const auto& r : pr.region)
                    if (r && r->in_halfspace(h) && !r->in_halfspace(p)) ++in_h_not_p;
                return in_h_not_p >= 3;
            });
        case 6:
            for (Direction h : all_directions) {
                if (pr.halfspace_count(h) != 4) continue;
                std::array<int, 27> seen{};
                bool ok = true;
                int corners = 0;
                for (const auto& r : pr.region) {
                    if (!r || !r->in_halfspace(h)) continue;
                    if (!r->is_corner()) {
                        ok = false;
                        break;
                    }
                    ++corners;
                    if (++seen[static_cast<std::size_t>(r->index())] > 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok && corners == 4) return true;
            }
            return false;
        case 7:
            for (Direction h : all_directions) {
                if (pr.halfspace_count(h) != 4) continue;
                for (RegionId c : all_corner_regions())
                    if (c.in_halfspace(h) && pr.region_count(c) == 2) return true;
            }
            return false;
        case 8:
            for (RegionId c : all_corner_regions()) {
                RegionId o = RegionId::corner(-c.sign[0], -c.sign[1], -c.sign[2]);
                if (pr.region_count(c) == 3 && pr.region_count(o) == 3) return true;
            }
            return false;
        default:
            return false;
    }
}

}  // namespace mbsb
