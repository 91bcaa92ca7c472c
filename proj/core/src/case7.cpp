#include "mbsb/case7.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mbsb {

std::vector<std::pair<std::int32_t, std::int32_t>> enumerate_pairs(
    const Scene& scene, const Staircases& stairs, RegionId corner,
    std::pair<Direction, Direction> faces, bool accelerated) {
    const auto& el = stairs.elems_of(corner);
    const int axa = axis_of(faces.first), axb = axis_of(faces.second);
    const int sa = sign_of(faces.first), sb = sign_of(faces.second);
    auto da = [&](std::int32_t i) {
        return mapped_dist(scene.s_min, scene.retained[static_cast<std::size_t>(i)], axa, sa);
    };
    auto db = [&](std::int32_t i) {
        return mapped_dist(scene.s_min, scene.retained[static_cast<std::size_t>(i)], axb, sb);
    };

    std::vector<std::pair<std::int32_t, std::int32_t>> out;
    if (accelerated) {
        auto proj = pareto_min_2d(scene, el, axa, sa, axb, sb);
        for (std::size_t t = 0; t + 1 < proj.size(); ++t) out.push_back({proj[t + 1], proj[t]});
        return out;
    }
    for (std::int32_t p : el)
        for (std::int32_t q : el)
            if (da(q) < da(p) && db(p) < db(q)) out.push_back({p, q});
    return out;
}

std::vector<std::pair<double, double>> free_pair_frontier(const Scene& scene, const Box3& pinned,
                                                          Direction fa, Direction fb) {
    const int axa = axis_of(fa), axb = axis_of(fb);
    Box3 relax = pinned;
    relax.set_bound(fa, is_positive(fa) ? inf : -inf);
    relax.set_bound(fb, is_positive(fb) ? inf : -inf);

    struct Active {
        double da;  // mapped distance of the a-coordinate beyond the fa face
        double cb;  // raw b-coordinate
    };
    std::vector<Active> act;
    std::vector<std::pair<double, double>> cands;  // (mapped dist, raw coord) for va
    for (const Point3& q : scene.retained) {
        if (!contains_open(relax, q)) continue;
        const double d = mapped_dist(scene.s_min, q, axa, sign_of(fa));
        act.push_back({d, q[axb]});
        if (d >= 0) cands.push_back({d, q[axa]});
    }
    std::sort(act.begin(), act.end(), [](const Active& l, const Active& r) { return l.da < r.da; });

    const double va_max = scene.s_max.bound(fa);
    cands.push_back({sign_of(fa) > 0 ? va_max - scene.s_min.hi[axa]
                                     : scene.s_min.lo[axa] - va_max,
                     va_max});
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    const bool pos_b = is_positive(fb);
    const double face_b = scene.s_min.bound(fb);
    const double smax_b = scene.s_max.bound(fb);

    std::vector<std::pair<double, double>> raw;
    std::size_t k = 0;
    double cap = pos_b ? inf : -inf;
    for (const auto& [dist, va] : cands) {
        while (k < act.size() && act[k].da < dist) {
            cap = pos_b ? std::min(cap, act[k].cb) : std::max(cap, act[k].cb);
            ++k;
        }
        double vb = pos_b ? std::min(cap, smax_b) : std::max(cap, smax_b);
        const bool feasible = pos_b ? vb >= face_b : vb <= face_b;
        if (!feasible) break;  // cap only tightens as va grows outward
        raw.push_back({va, vb});
    }
    // keep only the outermost va per distinct vb (the frontier corners)
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (i + 1 < raw.size() && raw[i + 1].second == raw[i].second) continue;
        out.push_back(raw[i]);
    }
    return out;
}

namespace {

struct Config {
    Direction dh;   // halfspace face; all four quadruple supports lie beyond it
    int axp, sp;    // shared axis: both its faces are in the quadruple
    int axq, sq;    // other axis: face (axq, sq) pinned by rows, (axq, -sq) free
    RegionId c1, c2;
    Direction f_p_pos, f_p_neg, f_q_pos, f_free_q, f_free_l;
};

std::vector<Config> make_configs() {
    std::vector<Config> out;
    for (Direction dh : all_directions) {
        const int axh = axis_of(dh);
        for (int axp = 0; axp < 3; ++axp) {
            if (axp == axh) continue;
            const int axq = 3 - axh - axp;
            for (int sp : {-1, +1})
                for (int sq : {-1, +1}) {
                    Config c;
                    c.dh = dh;
                    c.axp = axp;
                    c.sp = sp;
                    c.axq = axq;
                    c.sq = sq;
                    RegionId c1, c2;
                    c1.sign[axh] = static_cast<std::int8_t>(sign_of(dh));
                    c1.sign[axp] = static_cast<std::int8_t>(sp);
                    c1.sign[axq] = static_cast<std::int8_t>(sq);
                    c2.sign[axh] = static_cast<std::int8_t>(sign_of(dh));
                    c2.sign[axp] = static_cast<std::int8_t>(-sp);
                    c2.sign[axq] = static_cast<std::int8_t>(-sq);
                    c.c1 = c1;
                    c.c2 = c2;
                    c.f_p_pos = direction_of(axp, sp);
                    c.f_p_neg = direction_of(axp, -sp);
                    c.f_q_pos = direction_of(axq, sq);
                    c.f_free_q = direction_of(axq, -sq);
                    c.f_free_l = opposite(dh);
                    out.push_back(c);
                }
        }
    }
    return out;
}

struct PairBounds {
    double v_first, v_second;  // bound on faces.first / faces.second
    std::int32_t p_first, p_second;
    double key;   // mapped dist of v_first (sort key)
    double aux;   // mapped dist of the pair's largest dh-coordinate (rows only)
};

std::vector<PairBounds> pair_bounds(const Scene& scene,
                                    const std::vector<std::pair<std::int32_t, std::int32_t>>& ps,
                                    Direction fa, Direction fb, Direction dh) {
    std::vector<PairBounds> out;
    out.reserve(ps.size());
    for (auto [p, q] : ps) {
        const Point3& pp = scene.retained[static_cast<std::size_t>(p)];
        const Point3& qq = scene.retained[static_cast<std::size_t>(q)];
        PairBounds b;
        b.v_first = pp[axis_of(fa)];
        b.v_second = qq[axis_of(fb)];
        b.p_first = p;
        b.p_second = q;
        b.key = mapped_dist(scene.s_min, pp, axis_of(fa), sign_of(fa));
        b.aux = std::max(mapped_dist(scene.s_min, pp, axis_of(dh), sign_of(dh)),
                         mapped_dist(scene.s_min, qq, axis_of(dh), sign_of(dh)));
        out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const PairBounds& l, const PairBounds& r) {
        if (l.key != r.key) return l.key < r.key;
        if (l.v_second != r.v_second) return l.v_second < r.v_second;
        return l.p_first < r.p_first;
    });
    return out;
}

Box3 assemble(const Scene& scene, const Config& cf, const PairBounds& row, const PairBounds& col,
              double v_free_l, double v_free_q) {
    Box3 b = scene.s_min;
    b.set_bound(cf.f_p_pos, row.v_first);
    b.set_bound(cf.f_q_pos, row.v_second);
    b.set_bound(cf.dh, col.v_first);
    b.set_bound(cf.f_p_neg, col.v_second);
    b.set_bound(cf.f_free_l, v_free_l);
    b.set_bound(cf.f_free_q, v_free_q);
    return b;
}

struct Best {
    std::optional<CandidateBox> cb;
    void offer(const std::optional<CandidateBox>& c) {
        if (!c) return;
        if (!cb || volume(c->box) > volume(cb->box) ||
            (volume(c->box) == volume(cb->box) && lex_less(c->box, cb->box)))
            cb = c;
    }
};

std::optional<CandidateBox> certify_case7(const GrowthEngine& eng, const Box3& box) {
    auto cb = certify(eng, box, CaseLabel::case7, /*check_empty=*/true);
    if (!cb) return std::nullopt;
    if (!matches_case_pattern(*eng.scene, *cb, 7)) return std::nullopt;
    return cb;
}

}  // namespace

std::vector<CandidateBox> enumerate_case7_direct(const Scene& scene, const Staircases& stairs,
                                                 const GrowthEngine& eng) {
    std::vector<CandidateBox> out;
    std::set<std::array<double, 6>> seen;
    for (const Config& cf : make_configs()) {
        auto rows_raw = enumerate_pairs(scene, stairs, cf.c1,
                                        {direction_of(cf.axp, cf.sp), cf.f_q_pos}, false);
        if (rows_raw.empty()) continue;
        auto cols_raw =
            enumerate_pairs(scene, stairs, cf.c2, {cf.dh, cf.f_p_neg}, false);
        if (cols_raw.empty()) continue;
        auto rows = pair_bounds(scene, rows_raw, direction_of(cf.axp, cf.sp), cf.f_q_pos, cf.dh);
        auto cols = pair_bounds(scene, cols_raw, cf.dh, cf.f_p_neg, cf.dh);
        for (const PairBounds& r : rows) {
            for (const PairBounds& c : cols) {
                Box3 quad = scene.s_min;
                quad.set_bound(direction_of(cf.axp, cf.sp), r.v_first);
                quad.set_bound(cf.f_q_pos, r.v_second);
                quad.set_bound(cf.dh, c.v_first);
                quad.set_bound(cf.f_p_neg, c.v_second);
                if (!quad.valid()) continue;
                for (auto [vl, vq] : free_pair_frontier(scene, quad, cf.f_free_l, cf.f_free_q)) {
                    Box3 b = quad;
                    b.set_bound(cf.f_free_l, vl);
                    b.set_bound(cf.f_free_q, vq);
                    std::array<double, 6> key = {b.lo[0], b.lo[1], b.lo[2],
                                                 b.hi[0], b.hi[1], b.hi[2]};
                    if (!seen.insert(key).second) continue;
                    auto cb = certify_case7(eng, b);
                    if (cb) out.push_back(*cb);
                }
            }
        }
    }
    return out;
}

std::optional<CandidateBox> enumerate_case7_fast(const Scene& scene, const Staircases& stairs,
                                                 const PointerTable& ptrs, const GrowthEngine& eng,
                                                 Case7Stats* stats, bool check_monotone) {
    (void)ptrs;
    Best best;
    std::mt19937_64 guard_rng(0xc7u);

    for (const Config& cf : make_configs()) {
        auto rows_raw = enumerate_pairs(scene, stairs, cf.c1,
                                        {direction_of(cf.axp, cf.sp), cf.f_q_pos}, true);
        if (rows_raw.empty()) continue;
        auto cols_raw = enumerate_pairs(scene, stairs, cf.c2, {cf.dh, cf.f_p_neg}, true);
        if (cols_raw.empty()) continue;
        auto rows = pair_bounds(scene, rows_raw, direction_of(cf.axp, cf.sp), cf.f_q_pos, cf.dh);
        auto cols = pair_bounds(scene, cols_raw, cf.dh, cf.f_p_neg, cf.dh);

        // layers: maximal free-pair values from the free wedge plus
        // single-support layers capped by s_max
        std::set<std::pair<double, double>> layer_set;
        layer_set.insert({scene.s_max.bound(cf.f_free_l), scene.s_max.bound(cf.f_free_q)});
        {
            RegionId we = RegionId::edge(axis_of(cf.f_free_l), sign_of(cf.f_free_l),
                                         axis_of(cf.f_free_q), sign_of(cf.f_free_q));
            auto add_pairs = [&](const std::vector<std::int32_t>& el) {
                auto proj = pareto_min_2d(scene, el, axis_of(cf.f_free_l), sign_of(cf.f_free_l),
                                          axis_of(cf.f_free_q), sign_of(cf.f_free_q));
                for (std::size_t t = 0; t + 1 < proj.size(); ++t) {
                    const Point3& a = scene.retained[static_cast<std::size_t>(proj[t + 1])];
                    const Point3& b = scene.retained[static_cast<std::size_t>(proj[t])];
                    layer_set.insert(
                        {a[axis_of(cf.f_free_l)], b[axis_of(cf.f_free_q)]});
                }
            };
            add_pairs(stairs.elems_of(we));
            for (int sg : {-1, +1}) {
                RegionId c;
                c.sign[axis_of(cf.f_free_l)] = static_cast<std::int8_t>(sign_of(cf.f_free_l));
                c.sign[axis_of(cf.f_free_q)] = static_cast<std::int8_t>(sign_of(cf.f_free_q));
                c.sign[3 - axis_of(cf.f_free_l) - axis_of(cf.f_free_q)] =
                    static_cast<std::int8_t>(sg);
                add_pairs(stairs.elems_of(c));
            }
            for (int rix = 0; rix < 27; ++rix) {
                RegionId r = RegionId::from_index(rix);
                if (r.off_axis_count() < 2) continue;
                for (std::int32_t p : stairs.elems[static_cast<std::size_t>(rix)]) {
                    const Point3& q = scene.retained[static_cast<std::size_t>(p)];
                    if (r.in_halfspace(cf.f_free_l))
                        layer_set.insert(
                            {q[axis_of(cf.f_free_l)], scene.s_max.bound(cf.f_free_q)});
                    if (r.in_halfspace(cf.f_free_q))
                        layer_set.insert(
                            {scene.s_max.bound(cf.f_free_l), q[axis_of(cf.f_free_q)]});
                }
            }
        }

        for (const auto& [vl, vq] : layer_set) {
            // columns alive in this layer: both pair points strictly within
            // the free q-bound
            std::vector<int> alive;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                auto strictly_within = [&](std::int32_t pt) {
                    const double c = scene.retained[static_cast<std::size_t>(pt)][cf.axq];
                    return is_positive(cf.f_free_q) ? c < vq : c > vq;
                };
                if (strictly_within(cols[j].p_first) && strictly_within(cols[j].p_second))
                    alive.push_back(static_cast<int>(j));
            }
            if (alive.empty()) continue;

            // per-row first defined column: the dh bound must lie strictly
            // beyond both row points
            std::vector<int> jmin(rows.size());
            {
                std::vector<double> colkey(alive.size());
                for (std::size_t jj = 0; jj < alive.size(); ++jj)
                    colkey[jj] = cols[static_cast<std::size_t>(alive[jj])].key;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    jmin[i] = static_cast<int>(
                        std::upper_bound(colkey.begin(), colkey.end(), rows[i].aux) -
                        colkey.begin());
                }
            }

            constexpr double pad = -1.0;
            auto area = [&](int i, int jj) {
                const PairBounds& r = rows[static_cast<std::size_t>(i)];
                const PairBounds& c = cols[static_cast<std::size_t>(alive[static_cast<std::size_t>(jj)])];
                const double wh = is_positive(cf.dh) ? c.v_first - vl : vl - c.v_first;
                const double wp = cf.sp > 0 ? r.v_first - c.v_second : c.v_second - r.v_first;
                return wh * wp;
            };
            ImplicitMatrix m{static_cast<int>(rows.size()), static_cast<int>(alive.size()),
                             [&](int i, int jj) {
                                 return jj >= jmin[static_cast<std::size_t>(i)] ? area(i, jj)
                                                                                : pad;
                             }};
            std::uint64_t evals = 0;
            auto maxima = row_maxima(m, &evals);
            if (stats) {
                ++stats->layers;
                stats->smawk_evals += evals;
                const double ratio =
                    static_cast<double>(evals) / static_cast<double>(m.rows + m.cols);
                stats->worst_eval_ratio = std::max(stats->worst_eval_ratio, ratio);
            }
            if (check_monotone && m.rows >= 2 && m.cols >= 2 && stats) {
                std::uniform_int_distribution<int> ri(0, m.rows - 1), ci(0, m.cols - 1);
                for (int t = 0; t < 16; ++t) {
                    int i1 = ri(guard_rng), i2 = ri(guard_rng);
                    int j1 = ci(guard_rng), j2 = ci(guard_rng);
                    if (i1 > i2) std::swap(i1, i2);
                    if (j1 > j2) std::swap(j1, j2);
                    if (i1 == i2 || j1 == j2) continue;
                    // defined 2x2 submatrices only: the transformed slice
                    if (j1 < jmin[static_cast<std::size_t>(i1)] ||
                        j1 < jmin[static_cast<std::size_t>(i2)])
                        continue;
                    if (m.eval(i1, j1) <= m.eval(i1, j2) && m.eval(i2, j1) > m.eval(i2, j2))
                        ++stats->monotonicity_violations;
                }
            }

            std::optional<std::pair<int, int>> layer_best;  // (row, alive col)
            double layer_best_vol = -1;
            for (int i = 0; i < m.rows; ++i) {
                if (maxima[static_cast<std::size_t>(i)].value == pad) continue;
                const int jj = maxima[static_cast<std::size_t>(i)].col;
                const PairBounds& r = rows[static_cast<std::size_t>(i)];
                const PairBounds& c =
                    cols[static_cast<std::size_t>(alive[static_cast<std::size_t>(jj)])];
                Box3 b = assemble(scene, cf, r, c, vl, vq);
                if (!b.valid()) continue;
                const double v = volume(b);
                if (v > layer_best_vol) {
                    layer_best_vol = v;
                    layer_best = {i, jj};
                }
                best.offer(certify_case7(eng, b));
            }

            // densify the layer's best quadruple through the exact frontier
            if (layer_best) {
                const PairBounds& r = rows[static_cast<std::size_t>(layer_best->first)];
                const PairBounds& c = cols[static_cast<std::size_t>(
                    alive[static_cast<std::size_t>(layer_best->second)])];
                Box3 quad = scene.s_min;
                quad.set_bound(direction_of(cf.axp, cf.sp), r.v_first);
                quad.set_bound(cf.f_q_pos, r.v_second);
                quad.set_bound(cf.dh, c.v_first);
                quad.set_bound(cf.f_p_neg, c.v_second);
                if (quad.valid()) {
                    for (auto [wl, wq] : free_pair_frontier(scene, quad, cf.f_free_l, cf.f_free_q)) {
                        Box3 b = quad;
                        b.set_bound(cf.f_free_l, wl);
                        b.set_bound(cf.f_free_q, wq);
                        best.offer(certify_case7(eng, b));
                    }
                }
            }
        }
    }
    return best.cb;
}

}  // namespace mbsb
