#include "mbsb/solver.hpp"

#include <chrono>

namespace mbsb {

namespace {

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

struct Reducer {
    std::optional<CandidateBox> best;

    void offer(const CandidateBox& cb) {
        if (!best) {
            best = cb;
            return;
        }
        const double v = volume(cb.box), bv = volume(best->box);
        if (v > bv || (v == bv && lex_less(cb.box, best->box))) best = cb;
    }
};

}  // namespace

SolveResult solve_scene(const Scene& scene, const SolveOptions& options) {
    SolveResult res;
    res.stats.m_retained = scene.m();
    res.stats.discarded_inside = scene.discarded_inside;
    res.stats.discarded_outside = scene.discarded_outside;

    if (!scene.bounded()) {
        res.bounded = false;
        res.unbounded_directions = scene.unbounded_directions();
        return res;
    }
    res.bounded = true;

    const std::uint64_t t0 = now_ns();
    Staircases stairs = build_staircases(scene);
    PointerTable ptrs = build_pointers(scene, stairs);
    const std::uint64_t t1 = now_ns();
    res.stats.structures_ns = t1 - t0;

    GrowthEngine eng{&scene, &stairs, options.fast_grow};
    Reducer red;

    auto note = [&](const char* label, std::uint64_t n) {
        res.stats.candidates[label] += n;
    };

    if (auto tc = trivial_candidate(eng)) {
        red.offer(*tc);
        note(case_label_name(CaseLabel::trivial), 1);
    }
    for (int k : {1, 2, 3, 4, 5, 6}) {
        if (!options.enabled(k)) continue;
        auto cs = enumerate_case(scene, stairs, ptrs, eng, k);
        note(case_label_name(static_cast<CaseLabel>(k)), cs.size());
        for (const CandidateBox& cb : cs) red.offer(cb);
    }
    if (options.enabled(7)) {
        if (options.case7_fast) {
            auto best7 = enumerate_case7_fast(scene, stairs, ptrs, eng, &res.stats.case7,
                                              options.check_monotonicity);
            if (best7) {
                red.offer(*best7);
                note(case_label_name(CaseLabel::case7), 1);
            }
        } else {
            auto cs = enumerate_case7_direct(scene, stairs, eng);
            note(case_label_name(CaseLabel::case7), cs.size());
            for (const CandidateBox& cb : cs) red.offer(cb);
        }
    }
    if (options.enabled(8)) {
        auto cs = enumerate_case(scene, stairs, ptrs, eng, 8);
        note(case_label_name(CaseLabel::case8), cs.size());
        for (const CandidateBox& cb : cs) red.offer(cb);
    }
    if (options.supplementary_enabled) {
        auto cs = enumerate_supplementary(scene, stairs, eng);
        note(case_label_name(CaseLabel::supplementary), cs.size());
        for (const CandidateBox& cb : cs) red.offer(cb);
    }
    if (options.slab_enabled) {
        auto cs = enumerate_slabs(scene, stairs, eng, options.slab_max_m);
        note("slab", cs.size());
        for (const CandidateBox& cb : cs) red.offer(cb);
    }
    res.stats.cases_ns = now_ns() - t1;

    res.best = red.best;
    return res;
}

SolveResult solve(std::span<const Point3> red, std::span<const Point3> blue,
                  const SolveOptions& options) {
    const std::uint64_t t0 = now_ns();
    Scene scene = build_scene(red, blue);
    const std::uint64_t t1 = now_ns();
    SolveResult res = solve_scene(scene, options);
    res.stats.preprocess_ns = t1 - t0;
    return res;
}

}  // namespace mbsb
