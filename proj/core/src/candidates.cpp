#include <algorithm>
#include <bit>
#include <unordered_set>

#include "mbsb/candidates.hpp"
#include "mbsb/errors.hpp"

namespace mbsb {

namespace {

struct BoxKey {
    std::array<std::uint64_t, 6> w;
    friend bool operator==(const BoxKey&, const BoxKey&) = default;
};

struct BoxKeyHash {
    std::size_t operator()(const BoxKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t v : k.w) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

BoxKey key_of(const Box3& b) {
    BoxKey k;
    for (int a = 0; a < 3; ++a) {
        k.w[static_cast<std::size_t>(a)] = std::bit_cast<std::uint64_t>(b.lo[a]);
        k.w[static_cast<std::size_t>(a) + 3] = std::bit_cast<std::uint64_t>(b.hi[a]);
    }
    return k;
}

using Order = std::vector<Direction>;

struct Emitter {
    const Scene& scene;
    const Staircases& stairs;
    const GrowthEngine& eng;
    CaseLabel label;
    int pattern = 0;  // 0: universal constraints only
    std::unordered_set<BoxKey, BoxKeyHash> seen;
    std::vector<CandidateBox> out;

    double coord(std::int32_t i, int axis) const {
        return scene.retained[static_cast<std::size_t>(i)][axis];
    }

    void emit_grown(const Box3& box) {
        if (!seen.insert(key_of(box)).second) return;
        auto cb = certify(eng, box, label, /*check_empty=*/false);
        if (!cb) return;
        if (pattern != 0 && !matches_case_pattern(scene, *cb, pattern)) return;
        out.push_back(*cb);
    }

    /// Fully pinned box: feasibility is not established yet.
    void emit_pinned(const Box3& box) {
        if (!box.valid()) return;
        if (!box.contains_box(scene.s_min) || !scene.s_max.contains_box(box)) return;
        if (seen.contains(key_of(box))) return;
        if (!open_interior_free(scene, stairs, box)) return;
        emit_grown(box);
    }

    /// Pin, verify feasibility, grow the listed directions, certify, emit.
    void try_seed(const Box3& pinned, const Order& order) {
        if (!pinned.valid()) return;
        if (!pinned.contains_box(scene.s_min) || !scene.s_max.contains_box(pinned)) return;
        if (!open_interior_free(scene, stairs, pinned)) return;
        grow_from(pinned, order);
    }

    /// Same but feasibility of `pinned` is already known.
    void grow_from(Box3 box, const Order& order) {
        for (Direction d : order) {
            GrowResult g = eng.grow(box, d);
            if (g.support.kind == Support::Kind::unbounded) return;
            box.set_bound(d, g.bound);
        }
        emit_grown(box);
    }
};

/// Adjacent tight pairs of `elems` projected onto (fA, fB): each pair yields
/// the bounds (value on fA, value on fB) of a box both points support
/// simultaneously. Canonical projected order makes the later element the
/// fA support and the earlier one the fB support.
struct PairPin {
    double va, vb;
    std::int32_t pa, pb;
};

std::vector<PairPin> pair_pins(const Scene& scene, const std::vector<std::int32_t>& elems,
                               Direction fa, Direction fb) {
    std::vector<PairPin> out;
    if (elems.size() < 2) return out;
    auto proj = pareto_min_2d(scene, elems, axis_of(fa), sign_of(fa), axis_of(fb), sign_of(fb));
    for (std::size_t t = 0; t + 1 < proj.size(); ++t) {
        const Point3& ea = scene.retained[static_cast<std::size_t>(proj[t + 1])];
        const Point3& eb = scene.retained[static_cast<std::size_t>(proj[t])];
        out.push_back({ea[axis_of(fa)], eb[axis_of(fb)], proj[t + 1], proj[t]});
    }
    return out;
}

RegionId quarter_corner(Direction dh, Direction dp, int sg) {
    RegionId r;
    r.sign[axis_of(dh)] = static_cast<std::int8_t>(sign_of(dh));
    r.sign[axis_of(dp)] = static_cast<std::int8_t>(sign_of(dp));
    r.sign[3 - axis_of(dh) - axis_of(dp)] = static_cast<std::int8_t>(sg);
    return r;
}

struct CaseContext {
    Emitter& em;
    const Scene& scene;
    const Staircases& stairs;
    const PointerTable& ptrs;

    const std::vector<std::int32_t>& elems(RegionId r) const { return stairs.elems_of(r); }

    /// Adjacent staircase pairs of an edge region, walked through the
    /// directional pointers: each step's fa-partner is the next staircase
    /// element strictly beyond it toward fa.
    std::vector<PairPin> edge_pairs(RegionId e, Direction fa, Direction fb) const {
        std::vector<PairPin> out;
        const auto& el = elems(e);
        for (std::int32_t p : el) {
            auto pos = ptrs.lookup(p, e, fa);
            if (!pos) continue;
            std::int32_t q = el[static_cast<std::size_t>(*pos)];
            out.push_back({scene.retained[static_cast<std::size_t>(q)][axis_of(fa)],
                           scene.retained[static_cast<std::size_t>(p)][axis_of(fb)], q, p});
        }
        return out;
    }

    /// Tight pairs of the wedge spanned by two faces on different axes:
    /// adjacent pairs of the wedge's edge staircase plus projected adjacent
    /// pairs of its two corner staircases.
    std::vector<PairPin> wedge_pairs(Direction fx, Direction fy) const {
        std::vector<PairPin> out;
        RegionId e = RegionId::edge(axis_of(fx), sign_of(fx), axis_of(fy), sign_of(fy));
        for (const PairPin& p : edge_pairs(e, fx, fy)) out.push_back(p);
        const int g = 3 - axis_of(fx) - axis_of(fy);
        for (int sg : {-1, +1}) {
            RegionId c;
            c.sign[axis_of(fx)] = static_cast<std::int8_t>(sign_of(fx));
            c.sign[axis_of(fy)] = static_cast<std::int8_t>(sign_of(fy));
            c.sign[g] = static_cast<std::int8_t>(sg);
            for (const PairPin& p : pair_pins(scene, elems(c), fx, fy)) out.push_back(p);
        }
        return out;
    }

    /// Grow `pre` from a feasible pinned box, then pin every wedge pair on
    /// (fx, fy) and finish with `post`.
    void residual_pairs(const Box3& pinned, const Order& pre, Direction fx, Direction fy,
                        const Order& post) {
        if (!pinned.valid() || !pinned.contains_box(scene.s_min) ||
            !scene.s_max.contains_box(pinned))
            return;
        if (!open_interior_free(scene, stairs, pinned)) return;
        Box3 inter = pinned;
        for (Direction d : pre) {
            GrowResult g = em.eng.grow(inter, d);
            if (g.support.kind == Support::Kind::unbounded) return;
            inter.set_bound(d, g.bound);
        }
        for (const PairPin& p : wedge_pairs(fx, fy)) {
            Box3 b = inter;
            b.set_bound(fx, p.va);
            b.set_bound(fy, p.vb);
            em.try_seed(b, post);
        }
    }

    // --- the published case narratives, generalized over (H, H_perp) ---

    // Case 1: 5 supports in H, 4 of them in H n H_perp. Seed: the g-face
    // support from a quarter corner; the rest follows by growth
    // (back, right, bottom, then front, then left in the canonical frame).
    void case1(Direction dh, Direction dp) {
        const int g = 3 - axis_of(dh) - axis_of(dp);
        for (int sg : {-1, +1}) {
            RegionId c = quarter_corner(dh, dp, sg);
            Direction fg = direction_of(g, sg);
            for (std::int32_t s : elems(c)) {
                Box3 pin = scene.s_min;
                pin.set_bound(fg, em.coord(s, g));
                em.try_seed(pin, {dp, dh, opposite(fg), opposite(dp), opposite(dh)});
            }
        }
    }

    // Case 2: 5 in H, 3 in H n H_perp. Seeds: (g-face, H_perp-face) pairs
    // from the quarter corner; two narrative branches for the third
    // quarter support, each followed by the O(m) residual wedge pairs.
    void case2(Direction dh, Direction dp) {
        const int g = 3 - axis_of(dh) - axis_of(dp);
        for (int sg : {-1, +1}) {
            RegionId c = quarter_corner(dh, dp, sg);
            Direction fg = direction_of(g, sg);
            for (const PairPin& pp : pair_pins(scene, elems(c), fg, dp)) {
                Box3 pin = scene.s_min;
                pin.set_bound(fg, pp.va);
                pin.set_bound(dp, pp.vb);
                // branch A: triple {fg, dp, opposite(fg)}; residual (dh, front)
                em.try_seed(pin, {opposite(fg), dh, opposite(dp), opposite(dh)});
                em.try_seed(pin, {opposite(fg), opposite(dp), dh, opposite(dh)});
                residual_pairs(pin, {opposite(fg)}, dh, opposite(dp), {opposite(dh)});
                // branch B: triple {fg, dp, dh}; residual (front, opposite(fg))
                em.try_seed(pin, {dh, opposite(dp), opposite(fg), opposite(dh)});
                em.try_seed(pin, {dh, opposite(fg), opposite(dp), opposite(dh)});
                residual_pairs(pin, {dh}, opposite(dp), opposite(fg), {opposite(dh)});
            }
        }
    }

    // Case 3: 5 in H, 2 in H n H_perp, with an edge-region support in
    // H - H_perp. Seeds: quarter-corner pairs in both role combinations and
    // the (H, H_perp) edge staircase pairs.
    void case3(Direction dh, Direction dp) {
        const int g = 3 - axis_of(dh) - axis_of(dp);
        for (int sg : {-1, +1}) {
            RegionId c = quarter_corner(dh, dp, sg);
            Direction fg = direction_of(g, sg);
            for (const PairPin& pp : pair_pins(scene, elems(c), fg, dp)) {
                Box3 pin = scene.s_min;
                pin.set_bound(fg, pp.va);
                pin.set_bound(dp, pp.vb);
                em.try_seed(pin, {dh, opposite(fg), opposite(dp), opposite(dh)});
            }
            for (const PairPin& pp : pair_pins(scene, elems(c), dh, dp)) {
                Box3 pin = scene.s_min;
                pin.set_bound(dh, pp.va);
                pin.set_bound(dp, pp.vb);
                em.try_seed(pin, {fg, opposite(fg), opposite(dp), opposite(dh)});
                em.try_seed(pin, {fg, opposite(dp), opposite(fg), opposite(dh)});
                residual_pairs(pin, {fg}, opposite(dp), opposite(fg), {opposite(dh)});
            }
        }
        RegionId e = RegionId::edge(axis_of(dh), sign_of(dh), axis_of(dp), sign_of(dp));
        Direction gp = direction_of(g, +1), gm = direction_of(g, -1);
        for (const PairPin& pp : edge_pairs(e, dh, dp)) {
            Box3 pin = scene.s_min;
            pin.set_bound(dh, pp.va);
            pin.set_bound(dp, pp.vb);
            em.try_seed(pin, {gp, gm, opposite(dp), opposite(dh)});
            em.try_seed(pin, {gm, gp, opposite(dp), opposite(dh)});
        }
    }

    // Case 4: 5 in H, 3 supports across the two edge regions on the
    // remaining axis. Seed: adjacent pair of one edge staircase; the
    // opposite edge support, back and front follow by growth, left last.
    void case4(Direction dh, Direction dp) {
        const int g = 3 - axis_of(dh) - axis_of(dp);
        for (int sg : {-1, +1}) {
            RegionId e1 = RegionId::edge(axis_of(dh), sign_of(dh), g, sg);
            Direction fg = direction_of(g, sg);
            for (const PairPin& pp : edge_pairs(e1, dh, fg)) {
                Box3 pin = scene.s_min;
                pin.set_bound(dh, pp.va);
                pin.set_bound(fg, pp.vb);
                em.try_seed(pin, {opposite(fg), dp, opposite(dp), opposite(dh)});
                em.try_seed(pin, {dp, opposite(fg), opposite(dp), opposite(dh)});
            }
        }
    }

    // Case 5: 4 in H, 3 outside H_perp. Seeds: (H, H_perp) staircase pairs;
    // top/bottom by growth; left-front and left-bottom residual pairs.
    void case5(Direction dh, Direction dp) {
        const int g = 3 - axis_of(dh) - axis_of(dp);
        RegionId e = RegionId::edge(axis_of(dh), sign_of(dh), axis_of(dp), sign_of(dp));
        for (const PairPin& pp : edge_pairs(e, dh, dp)) {
            Box3 pin = scene.s_min;
            pin.set_bound(dh, pp.va);
            pin.set_bound(dp, pp.vb);
            for (int sg : {-1, +1}) {
                Direction fs = direction_of(g, sg), fo = direction_of(g, -sg);
                em.try_seed(pin, {fs, fo, opposite(dp), opposite(dh)});
                residual_pairs(pin, {fs, fo}, opposite(dh), opposite(dp), {});
                residual_pairs(pin, {fs, opposite(dp)}, opposite(dh), fo, {});
            }
        }
    }

    // Case 6: 4 in H, one support in each corner region of H. Seeds:
    // singletons from each corner in its forced role; the other three
    // quadruple faces by growth; front-left residual pairs.
    void case6(Direction dh, Direction dp) {
        const int g = 3 - axis_of(dh) - axis_of(dp);
        Direction gp = direction_of(g, +1), gm = direction_of(g, -1);
        const std::array<std::pair<RegionId, Direction>, 4> roles = {{
            {quarter_corner(dh, dp, +1), gp},
            {quarter_corner(dh, dp, -1), dp},
            {quarter_corner(dh, opposite(dp), +1), dh},
            {quarter_corner(dh, opposite(dp), -1), gm},
        }};
        const Order quad = {gp, dp, gm, dh};
        for (const auto& [c, fr] : roles) {
            Order rest;
            for (Direction d : quad)
                if (d != fr) rest.push_back(d);
            for (std::int32_t s : elems(c)) {
                Box3 pin = scene.s_min;
                pin.set_bound(fr, em.coord(s, axis_of(fr)));
                Order o1 = rest;
                o1.push_back(opposite(dp));
                o1.push_back(opposite(dh));
                em.try_seed(pin, o1);
                Order o2 = rest;
                o2.push_back(opposite(dh));
                o2.push_back(opposite(dp));
                em.try_seed(pin, o2);
                residual_pairs(pin, rest, opposite(dp), opposite(dh), {});
                residual_pairs(pin, rest, opposite(dh), opposite(dp), {});
            }
        }
    }

    // Case 8: two opposite corner triples. Tight triples are fully pinned
    // pairwise; triple-with-growth seeds cover mixed completions.
    struct Triple {
        std::array<double, 3> bound;  // per axis, the pinned face value
    };

    std::vector<Triple> tight_triples(RegionId c) const {
        std::vector<Triple> out;
        const auto& el = elems(c);
        const Box3& sm = scene.s_min;
        auto d = [&](std::int32_t p, int axis) {
            return mapped_dist(sm, scene.retained[static_cast<std::size_t>(p)], axis,
                               c.sign[axis]);
        };
        for (std::int32_t pa : el)
            for (std::int32_t pb : el) {
                if (!(d(pb, 0) < d(pa, 0) && d(pa, 1) < d(pb, 1))) continue;
                for (std::int32_t pc : el) {
                    if (!(d(pc, 0) < d(pa, 0) && d(pc, 1) < d(pb, 1))) continue;
                    if (!(d(pa, 2) < d(pc, 2) && d(pb, 2) < d(pc, 2))) continue;
                    Triple t;
                    t.bound[0] = em.coord(pa, 0);
                    t.bound[1] = em.coord(pb, 1);
                    t.bound[2] = em.coord(pc, 2);
                    out.push_back(t);
                }
            }
        return out;
    }

    void case8() {
        for (RegionId c : all_corner_regions()) {
            if (c.sign[0] != +1) continue;  // one orientation per opposite pair
            RegionId o = RegionId::corner(-c.sign[0], -c.sign[1], -c.sign[2]);
            auto tc = tight_triples(c);
            auto to = tight_triples(o);
            auto face = [](RegionId r, int axis) { return direction_of(axis, r.sign[axis]); };

            auto pin_triple = [&](const Triple& t, RegionId r, Box3 base) {
                for (int a = 0; a < 3; ++a) base.set_bound(face(r, a), t.bound[static_cast<std::size_t>(a)]);
                return base;
            };

            for (const Triple& t1 : tc) {
                Box3 pin = pin_triple(t1, c, scene.s_min);
                const std::array<Direction, 3> rest = {face(o, 0), face(o, 1), face(o, 2)};
                for (int i = 0; i < 3; ++i) {
                    Order ord = {rest[static_cast<std::size_t>(i)],
                                 rest[static_cast<std::size_t>((i + 1) % 3)],
                                 rest[static_cast<std::size_t>((i + 2) % 3)]};
                    em.try_seed(pin, ord);
                    Order rev = {ord[2], ord[1], ord[0]};
                    em.try_seed(pin, rev);
                }
                for (const Triple& t2 : to) em.emit_pinned(pin_triple(t2, o, pin));
            }
            for (const Triple& t2 : to) {
                Box3 pin = pin_triple(t2, o, scene.s_min);
                const std::array<Direction, 3> rest = {face(c, 0), face(c, 1), face(c, 2)};
                for (int i = 0; i < 3; ++i) {
                    Order ord = {rest[static_cast<std::size_t>(i)],
                                 rest[static_cast<std::size_t>((i + 1) % 3)],
                                 rest[static_cast<std::size_t>((i + 2) % 3)]};
                    em.try_seed(pin, ord);
                }
            }
        }
    }
};

}  // namespace

std::vector<CandidateBox> enumerate_case(const Scene& scene, const Staircases& stairs,
                                         const PointerTable& ptrs, const GrowthEngine& eng,
                                         int k) {
    Emitter em{scene, stairs, eng, static_cast<CaseLabel>(k), k, {}, {}};
    CaseContext cx{em, scene, stairs, ptrs};
    if (k == 8) {
        cx.case8();
        return em.out;
    }
    for (Direction dh : all_directions) {
        for (Direction dp : all_directions) {
            if (axis_of(dh) == axis_of(dp)) continue;
            switch (k) {
                case 1: cx.case1(dh, dp); break;
                case 2: cx.case2(dh, dp); break;
                case 3: cx.case3(dh, dp); break;
                case 4: cx.case4(dh, dp); break;
                case 5: cx.case5(dh, dp); break;
                case 6: cx.case6(dh, dp); break;
                default: throw std::invalid_argument("enumerate_case: bad case number");
            }
        }
    }
    return em.out;
}

std::vector<CandidateBox> enumerate_supplementary(const Scene& scene, const Staircases& stairs,
                                                  const GrowthEngine& eng) {
    Emitter em{scene, stairs, eng, CaseLabel::supplementary, 0, {}, {}};

    // Pure-growth completions in a few fixed orders.
    const std::vector<Order> base_orders = {
        {Direction::front, Direction::left, Direction::back, Direction::right, Direction::bottom,
         Direction::top},
        {Direction::top, Direction::bottom, Direction::right, Direction::back, Direction::left,
         Direction::front},
        {Direction::right, Direction::top, Direction::front, Direction::left, Direction::bottom,
         Direction::back},
        {Direction::back, Direction::bottom, Direction::left, Direction::right, Direction::top,
         Direction::front},
    };
    for (const Order& o : base_orders) em.try_seed(scene.s_min, o);

    // All (staircase element, face role) pins.
    struct RolePin {
        Direction face;
        double value;
        std::int32_t point;
    };
    std::vector<RolePin> roles;
    for (int rix = 0; rix < 27; ++rix) {
        RegionId r = RegionId::from_index(rix);
        if (r.off_axis_count() < 2) continue;
        for (std::int32_t p : stairs.elems[static_cast<std::size_t>(rix)]) {
            for (int a = 0; a < 3; ++a) {
                if (r.sign[a] == 0) continue;
                roles.push_back({direction_of(a, r.sign[a]),
                                 scene.retained[static_cast<std::size_t>(p)][a], p});
            }
        }
    }

    auto orders_for = [](Direction pinned1, std::optional<Direction> pinned2) {
        std::vector<Order> res;
        auto remaining = [&](const std::vector<Direction>& lead) {
            Order o = lead;
            for (Direction d : all_directions) {
                if (d == pinned1 || (pinned2 && d == *pinned2)) continue;
                bool dup = false;
                for (Direction l : lead) dup |= (l == d);
                if (!dup) o.push_back(d);
            }
            return o;
        };
        if (!pinned2) {
            res.push_back(remaining({}));
            Order fwd = remaining({});
            Order rev(fwd.rbegin(), fwd.rend());
            res.push_back(rev);
            return res;
        }
        // all grow orders of the four free faces: growth of an s_max-held
        // face is order-insensitive, so this covers every dependency DAG the
        // remaining blue supports can impose
        std::array<Direction, 4> free{};
        std::size_t k = 0;
        for (Direction d : all_directions)
            if (d != pinned1 && d != *pinned2) free[k++] = d;
        std::sort(free.begin(), free.end());
        do {
            res.push_back({free[0], free[1], free[2], free[3]});
        } while (std::next_permutation(free.begin(), free.end()));
        return res;
    };

    for (const RolePin& rp : roles) {
        Box3 pin = scene.s_min;
        pin.set_bound(rp.face, rp.value);
        for (const Order& o : orders_for(rp.face, std::nullopt)) em.try_seed(pin, o);
    }
    // a pinned point can only support its face if it ends up strictly
    // within (or exactly on) the partner's pinned bound
    auto compatible = [&](const RolePin& a, const RolePin& b) {
        const double c = scene.retained[static_cast<std::size_t>(a.point)][axis_of(b.face)];
        return is_positive(b.face) ? c <= b.value : c >= b.value;
    };
    for (const RolePin& r1 : roles) {
        for (const RolePin& r2 : roles) {
            if (axis_of(r1.face) == axis_of(r2.face)) continue;
            if (!compatible(r1, r2) || !compatible(r2, r1)) continue;
            Box3 pin = scene.s_min;
            pin.set_bound(r1.face, r1.value);
            pin.set_bound(r2.face, r2.value);
            if (!pin.valid() || !open_interior_free(scene, stairs, pin)) continue;
            for (const Order& o : orders_for(r1.face, r2.face)) em.grow_from(pin, o);
        }
    }
    return em.out;
}

std::vector<CandidateBox> enumerate_slabs(const Scene& scene, const Staircases& stairs,
                                          const GrowthEngine& eng, std::size_t max_m) {
    Emitter em{scene, stairs, eng, CaseLabel::supplementary, 0, {}, {}};
    if (!scene.bounded() || scene.m() > max_m) return em.out;

    const Box3& sm = scene.s_min;
    auto face_values = [&](int axis, bool upper) {
        std::vector<double> v;
        v.push_back(upper ? scene.s_max.hi[axis] : scene.s_max.lo[axis]);
        for (const Point3& q : scene.retained) {
            if (upper && q[axis] >= sm.hi[axis]) v.push_back(q[axis]);
            if (!upper && q[axis] <= sm.lo[axis]) v.push_back(q[axis]);
        }
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };

    const auto zlos = face_values(2, false), zhis = face_values(2, true);
    const auto xlos = face_values(0, false), xhis = face_values(0, true);

    for (double zlo : zlos) {
        for (double zhi : zhis) {
            for (double xlo : xlos) {
                for (double xhi : xhis) {
                    // forced maximal y-growth for this (z-slab, x-interval)
                    double ylo = scene.s_max.lo[1], yhi = scene.s_max.hi[1];
                    bool feasible = true;
                    for (const Point3& q : scene.retained) {
                        if (q.z <= zlo || q.z >= zhi) continue;
                        if (q.x <= xlo || q.x >= xhi) continue;
                        if (q.y > sm.lo[1] && q.y < sm.hi[1]) {
                            feasible = false;
                            break;
                        }
                        if (q.y >= sm.hi[1]) yhi = std::min(yhi, q.y);
                        if (q.y <= sm.lo[1]) ylo = std::max(ylo, q.y);
                    }
                    if (!feasible) continue;
                    Box3 b{{xlo, ylo, zlo}, {xhi, yhi, zhi}};
                    if (!b.valid() || !b.contains_box(sm)) continue;
                    if (!em.seen.insert(key_of(b)).second) continue;
                    auto cb = certify(eng, b, CaseLabel::supplementary, /*check_empty=*/true);
                    if (cb) em.out.push_back(*cb);
                }
            }
        }
    }
    return em.out;
}

}  // namespace mbsb
