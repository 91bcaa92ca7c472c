#include "mbsb/oracle.hpp"

#include <algorithm>

#include "mbsb/errors.hpp"

namespace mbsb {

bool check_maximal(const Scene& scene, const Box3& box) {
    for (Direction d : all_directions) {
        GrowResult g = grow_reference(scene, box, d);
        if (g.bound != box.bound(d)) return false;
    }
    return true;
}

namespace {

std::vector<double> face_candidates(const Scene& scene, int axis, bool upper) {
    std::vector<double> v;
    v.push_back(upper ? scene.s_max.hi[axis] : scene.s_max.lo[axis]);
    for (const Point3& q : scene.retained) {
        if (upper && q[axis] >= scene.s_min.hi[axis]) v.push_back(q[axis]);
        if (!upper && q[axis] <= scene.s_min.lo[axis]) v.push_back(q[axis]);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

OracleResult solve_bruteforce(std::span<const Point3> red, std::span<const Point3> blue) {
    if (blue.size() > 14) throw oracle_cap_exceeded(blue.size());
    Scene scene = build_scene(red, blue);

    OracleResult res;
    if (!scene.bounded()) {
        res.bounded = false;
        res.unbounded_directions = scene.unbounded_directions();
        return res;
    }
    res.bounded = true;

    const Box3& sm = scene.s_min;
    const auto xlos = face_candidates(scene, 0, false), xhis = face_candidates(scene, 0, true);
    const auto ylos = face_candidates(scene, 1, false), yhis = face_candidates(scene, 1, true);

    bool have = false;
    Box3 best;
    double best_vol = -1;

    auto consider = [&](const Box3& b) {
        ++res.candidates_examined;
        const double v = volume(b);
        if (!have || v > best_vol || (v == best_vol && lex_less(b, best))) {
            have = true;
            best = b;
            best_vol = v;
        }
    };

    for (double xlo : xlos)
        for (double xhi : xhis)
            for (double ylo : ylos)
                for (double yhi : yhis) {
                    // forced maximal z-growth; a point tying a degenerate
                    // s_min z-slab splits the completion into two maximal
                    // variants (block above / block below).
                    bool feasible = true;
                    bool split = false;
                    double zhi_any = scene.s_max.hi[2], zlo_any = scene.s_max.lo[2];
                    double zlo_excl_tie = scene.s_max.lo[2], zhi_excl_tie = scene.s_max.hi[2];
                    for (const Point3& q : scene.retained) {
                        if (q.x <= xlo || q.x >= xhi || q.y <= ylo || q.y >= yhi) continue;
                        if (q.z > sm.lo[2] && q.z < sm.hi[2]) {
                            feasible = false;
                            break;
                        }
                        const bool tie = (q.z == sm.lo[2] && q.z == sm.hi[2]);
                        if (tie) split = true;
                        if (q.z >= sm.hi[2]) {
                            zhi_any = std::min(zhi_any, q.z);
                            if (!tie) zhi_excl_tie = std::min(zhi_excl_tie, q.z);
                        }
                        if (q.z <= sm.lo[2]) {
                            zlo_any = std::max(zlo_any, q.z);
                            if (!tie) zlo_excl_tie = std::max(zlo_excl_tie, q.z);
                        }
                    }
                    if (!feasible) continue;
                    if (!split) {
                        consider(Box3{{xlo, ylo, zlo_any}, {xhi, yhi, zhi_any}});
                    } else {
                        consider(Box3{{xlo, ylo, zlo_excl_tie}, {xhi, yhi, sm.hi[2]}});
                        consider(Box3{{xlo, ylo, sm.lo[2]}, {xhi, yhi, zhi_excl_tie}});
                    }
                }

    // Re-grow the winner so the reported box is maximal even when volume
    // ties make the enumerated box extendable (zero-volume degenerates).
    for (Direction d : all_directions) {
        GrowResult g = grow_reference(scene, best, d);
        best.set_bound(d, g.bound);
    }
    res.box = best;
    res.best_volume = volume(best);
    return res;
}

}  // namespace mbsb
