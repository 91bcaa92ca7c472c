// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mbsb/bench.hpp"
#include "mbsb/case7.hpp"
#include "mbsb/dataset.hpp"
#include "mbsb/oracle.hpp"
#include "mbsb/report.hpp"
#include "mbsb/smawk.hpp"
#include "mbsb/solver.hpp"

using namespace mbsb;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct InstanceSpec {
    std::string generator;
    std::uint64_t seed;
    std::size_t n, m;
};

std::vector<InstanceSpec> criterion_instances(std::size_t per_generator) {
    std::vector<InstanceSpec> out;
    const std::vector<std::string> gens = {"uniform-annulus", "clustered-corners",
                                           "grid-degenerate", "sparse-blockers"};
    std::mt19937_64 rng(0xacceb7ull);
    for (const std::string& g : gens) {
        for (std::size_t i = 0; i < per_generator; ++i) {
            InstanceSpec is;
            is.generator = g;
            is.seed = rng();
            is.n = 1 + is.seed % 40;
            is.m = (g == "sparse-blockers") ? 6 + (is.seed >> 8) % 7 : (is.seed >> 8) % 13;
            out.push_back(is);
        }
    }
    return out;
}

// ----- criterion 1: oracle equivalence --------------------------------------
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    auto specs = criterion_instances(250);
    std::size_t mismatches = 0, runs = 0;
    std::string first_bad;
    for (const InstanceSpec& is : specs) {
        GenSpec gs{is.generator, is.n, is.m, is.seed, 4};
        Dataset ds = generate(gs);
        SolveResult sr = solve(ds.red, ds.blue);
        OracleResult orc = solve_bruteforce(ds.red, ds.blue);
        ++runs;
        bool ok = sr.bounded == orc.bounded;
        if (ok && sr.bounded) ok = volume(sr.best->box) == orc.best_volume;
        if (ok && !sr.bounded) ok = sr.unbounded_directions == orc.unbounded_directions;
        if (!ok) {
            ++mismatches;
            if (first_bad.empty()) {
                std::ostringstream os;
                os << is.generator << " seed=" << is.seed << " n=" << is.n << " m=" << is.m;
                first_bad = os.str();
            }
        }
    }
    std::ostringstream detail;
    detail << runs << " instances, " << mismatches << " mismatches";
    if (!first_bad.empty()) detail << "; first: " << first_bad;
    detail << ", " << seconds_since(t0) << "s";
    report(1, "solve(fast) volume equals brute-force oracle exactly", mismatches == 0,
           detail.str());
}

// ----- criterion 2: case-7 fast/direct equivalence --------------------------
void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t compared = 0, mismatches = 0;
    Case7Stats stats;
    std::mt19937_64 rng(0xc2000ull);
    for (std::uint64_t i = 0; compared < 500 && i < 3000; ++i) {
        const std::uint64_t seed = rng();
        const std::vector<std::string> gens = {"uniform-annulus", "clustered-corners",
                                               "grid-degenerate", "sparse-blockers"};
        GenSpec gs{gens[i % 4], 1 + seed % 9, 6 + (seed >> 8) % 7, seed, 4};
        Dataset ds = generate(gs);
        Scene scene = build_scene(ds.red, ds.blue);
        if (!scene.bounded()) continue;
        Staircases stairs = build_staircases(scene);
        PointerTable ptrs = build_pointers(scene, stairs);
        GrowthEngine eng{&scene, &stairs, true};
        auto direct = enumerate_case7_direct(scene, stairs, eng);
        auto fast = enumerate_case7_fast(scene, stairs, ptrs, eng, &stats, true);
        double dv = -1;
        for (const CandidateBox& c : direct) dv = std::max(dv, volume(c.box));
        const double fv = fast ? volume(fast->box) : -1;
        ++compared;
        if (fv != dv) ++mismatches;
    }
    std::ostringstream detail;
    detail << compared << " instances, " << mismatches
           << " mismatches, worst eval ratio " << stats.worst_eval_ratio << " (cap 8), "
           << stats.monotonicity_violations << " monotonicity violations, " << seconds_since(t0)
           << "s";
    report(2, "case-7 fast equals direct; per-layer evals within 8(r+c)",
           mismatches == 0 && stats.worst_eval_ratio <= 8.0 &&
               stats.monotonicity_violations == 0 && compared >= 500,
           detail.str());
}

// ----- criterion 3: smawk vs naive ------------------------------------------
void criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0x5a3cull);
    std::uniform_int_distribution<int> size(1, 200);
    std::uniform_real_distribution<double> off(-50, 50);
    std::size_t bad = 0;
    for (int t = 0; t < 500; ++t) {
        const int rows = size(rng), cols = size(rng);
        std::vector<double> ro(static_cast<std::size_t>(rows)), co(static_cast<std::size_t>(cols));
        for (double& v : ro) v = off(rng);
        for (double& v : co) v = off(rng);
        ImplicitMatrix m{rows, cols, [&](int i, int j) {
                             const double d = static_cast<double>(i) - static_cast<double>(j);
                             return -d * d + ro[static_cast<std::size_t>(i)] +
                                    co[static_cast<std::size_t>(j)];
                         }};
        auto fast = row_maxima(m);
        for (int i = 0; i < rows; ++i) {
            int bc = 0;
            double bv = m.eval(i, 0);
            for (int j = 1; j < cols; ++j) {
                const double v = m.eval(i, j);
                if (v > bv) {
                    bv = v;
                    bc = j;
                }
            }
            if (fast[static_cast<std::size_t>(i)].col != bc ||
                fast[static_cast<std::size_t>(i)].value != bv)
                ++bad;
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << "500 matrices, " << bad << " row mismatches, " << secs << "s (budget 10s)";
    report(3, "smawk matches naive row maxima exactly", bad == 0 && secs < 10.0, detail.str());
}

// ----- criterion 4: structural invariants -----------------------------------
void criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    auto specs = criterion_instances(50);
    std::size_t boxes = 0, bad = 0;
    for (const InstanceSpec& is : specs) {
        GenSpec gs{is.generator, is.n, is.m, is.seed, 4};
        Dataset ds = generate(gs);
        Scene scene = build_scene(ds.red, ds.blue);
        if (!scene.bounded()) continue;
        Staircases stairs = build_staircases(scene);
        PointerTable ptrs = build_pointers(scene, stairs);
        GrowthEngine eng{&scene, &stairs, true};

        auto check = [&](const CandidateBox& cb, int pattern) {
            ++boxes;
            bool ok = cb.box.contains_box(scene.s_min) && scene.s_max.contains_box(cb.box);
            for (const Point3& q : scene.retained)
                if (contains_open(cb.box, q)) ok = false;
            if (!check_maximal(scene, cb.box)) ok = false;
            if (!universal_support_constraints(scene, cb)) ok = false;
            if (pattern != 0 && !matches_case_pattern(scene, cb, pattern)) ok = false;
            if (!ok) ++bad;
        };

        for (int k : {1, 2, 3, 4, 5, 6}) {
            for (const CandidateBox& cb : enumerate_case(scene, stairs, ptrs, eng, k))
                check(cb, k);
        }
        for (const CandidateBox& cb : enumerate_case7_direct(scene, stairs, eng)) check(cb, 7);
        if (auto f7 = enumerate_case7_fast(scene, stairs, ptrs, eng)) check(*f7, 7);
        for (const CandidateBox& cb : enumerate_case(scene, stairs, ptrs, eng, 8)) check(cb, 8);
        for (const CandidateBox& cb : enumerate_supplementary(scene, stairs, eng)) check(cb, 0);
        for (const CandidateBox& cb : enumerate_slabs(scene, stairs, eng)) check(cb, 0);
        if (auto tc = trivial_candidate(eng)) check(*tc, 0);
    }
    std::ostringstream detail;
    detail << boxes << " candidate boxes, " << bad << " violations, " << seconds_since(t0) << "s";
    report(4, "every emitted candidate satisfies the structural invariants", bad == 0 && boxes > 0,
           detail.str());
}

// ----- criterion 5: staircase and pointer correctness ------------------------
void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t bad = 0, scenes = 0;
    std::mt19937_64 rng(0x51ull);
    for (std::uint64_t seed = 0; scenes < 100 && seed < 400; ++seed) {
        const std::vector<std::string> gens = {"uniform-annulus", "clustered-corners",
                                               "grid-degenerate", "sparse-blockers"};
        GenSpec gs{gens[seed % 4], 1 + seed % 10, 20 + (seed * 31) % 181, rng(), 5};
        Dataset ds = generate(gs);
        Scene s = build_scene(ds.red, ds.blue);
        if (s.m() == 0) continue;
        ++scenes;
        Staircases st = build_staircases(s);

        // dominance filter equals brute force per region
        for (int rix = 0; rix < 27 && bad == 0; ++rix) {
            RegionId r = RegionId::from_index(rix);
            if (r.off_axis_count() != 2) continue;
            int ax1 = -1, ax2 = -1;
            for (int ax = 0; ax < 3; ++ax) {
                if (r.sign[ax] == 0) continue;
                (ax1 < 0 ? ax1 : ax2) = ax;
            }
            const auto& full = st.full[static_cast<std::size_t>(rix)];
            const auto& steps = st.elems[static_cast<std::size_t>(rix)];
            for (std::int32_t q : full) {
                const bool kept = std::find(steps.begin(), steps.end(), q) != steps.end();
                bool dominated = false;
                for (std::int32_t p : full) {
                    if (p == q) continue;
                    const Point3& pp = s.retained[static_cast<std::size_t>(p)];
                    const Point3& qq = s.retained[static_cast<std::size_t>(q)];
                    const double d1p = mapped_dist(s.s_min, pp, ax1, r.sign[ax1]);
                    const double d1q = mapped_dist(s.s_min, qq, ax1, r.sign[ax1]);
                    const double d2p = mapped_dist(s.s_min, pp, ax2, r.sign[ax2]);
                    const double d2q = mapped_dist(s.s_min, qq, ax2, r.sign[ax2]);
                    if (d1p <= d1q && d2p <= d2q && (d1p < d1q || d2p < d2q || p < q))
                        dominated = true;
                }
                if (kept == dominated) {
                    // kept step flagged dominated, or dropped point undominated
                    ++bad;
                    break;
                }
            }
        }

        // pointers equal directional scans (sampled)
        PointerTable pt = build_pointers(s, st);
        auto shares = [](RegionId a, RegionId b) {
            for (int ax = 0; ax < 3; ++ax)
                if (a.sign[ax] != 0 && a.sign[ax] == b.sign[ax]) return true;
            return false;
        };
        for (std::size_t pi = 0; pi < s.m() && bad == 0; pi += 1 + s.m() / 40) {
            for (int rix = 0; rix < 27; ++rix) {
                RegionId r = RegionId::from_index(rix);
                if (r.off_axis_count() < 2) continue;
                if (!shares(s.region[pi], r)) continue;
                const auto& elems = st.elems[static_cast<std::size_t>(rix)];
                for (Direction d : all_directions) {
                    auto got = pt.lookup(static_cast<std::int32_t>(pi), r, d);
                    std::optional<std::int32_t> want;
                    const int a = axis_of(d);
                    const Point3& p = s.retained[pi];
                    for (std::size_t e = 0; e < elems.size(); ++e) {
                        const Point3& q = s.retained[static_cast<std::size_t>(elems[e])];
                        const bool beyond = is_positive(d) ? q[a] > p[a] : q[a] < p[a];
                        if (!beyond) continue;
                        if (!want) {
                            want = static_cast<std::int32_t>(e);
                            continue;
                        }
                        const Point3& w = s.retained[static_cast<std::size_t>(
                            elems[static_cast<std::size_t>(*want)])];
                        const bool closer = is_positive(d) ? q[a] < w[a] : q[a] > w[a];
                        if (closer || (q[a] == w[a] &&
                                       elems[e] < elems[static_cast<std::size_t>(*want)]))
                            want = static_cast<std::int32_t>(e);
                    }
                    if (got != want) ++bad;
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream detail;
    detail << scenes << " scenes, " << bad << " violations, " << secs << "s (budget 30s)";
    report(5, "staircase dominance and pointers match brute force", bad == 0 && secs < 30.0,
           detail.str());
}

// ----- criterion 6: scaling slopes -------------------------------------------
void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream sink;

    BenchSweep m_sweep;
    m_sweep.generator = "sparse-blockers";
    m_sweep.m_values = {100, 200, 400, 800, 1600, 3200};
    m_sweep.n_values = {10000};
    m_sweep.reps = 5;
    m_sweep.seed = 61;
    auto m_recs = run_bench(m_sweep, sink);

    BenchSweep n_sweep;
    n_sweep.generator = "sparse-blockers";
    n_sweep.m_values = {50};
    n_sweep.n_values = {1000, 10000, 100000, 1000000};
    n_sweep.reps = 3;
    n_sweep.seed = 62;
    auto n_recs = run_bench(n_sweep, sink);

    auto median_xy = [](const std::vector<BenchRecord>& recs, bool by_m) {
        std::map<std::size_t, std::vector<double>> groups;
        for (const BenchRecord& r : recs)
            groups[by_m ? r.m : r.n].push_back(static_cast<double>(r.total_ns));
        std::vector<std::pair<double, double>> xy;
        for (auto& [k, v] : groups) {
            std::sort(v.begin(), v.end());
            xy.push_back({static_cast<double>(k), v[v.size() / 2]});
        }
        return xy;
    };
    const double slope_m = fit_loglog_slope(median_xy(m_recs, true));
    const double slope_n = fit_loglog_slope(median_xy(n_recs, false));
    const double secs = seconds_since(t0);

    std::ostringstream detail;
    detail << "slope vs m = " << slope_m << " (cap 2.4), slope vs n = " << slope_n
           << " (cap 1.3), " << secs << "s (budget 120s)";
    report(6, "empirical scaling within the O(m^2 + n) envelope",
           slope_m <= 2.4 && slope_n <= 1.3 && secs < 120.0, detail.str());
}

// ----- criterion 7: determinism and round trips -------------------------------
void criterion7() {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t bad = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::vector<std::string> gens = {"uniform-annulus", "clustered-corners",
                                               "grid-degenerate", "sparse-blockers"};
        GenSpec gs{gens[seed % 4], 1 + seed % 12, 6 + seed % 7, seed, 4};
        Dataset ds = generate(gs);
        Scene s1 = build_scene(ds.red, ds.blue);
        Scene s2 = build_scene(ds.red, ds.blue);
        if (solve_report_json(s1, solve_scene(s1)) != solve_report_json(s2, solve_scene(s2)))
            ++bad;
        for (Format f : {Format::csv, Format::json}) {
            std::ostringstream out;
            save_dataset(out, ds, f);
            std::istringstream in(out.str());
            Dataset back = load_dataset(in, f);
            if (back.red != ds.red || back.blue != ds.blue) ++bad;
            std::ostringstream out2;
            save_dataset(out2, back, f);
            if (out2.str() != out.str()) ++bad;
        }
    }
    std::ostringstream detail;
    detail << "40 instances, " << bad << " violations, " << seconds_since(t0) << "s";
    report(7, "byte-identical reports and lossless dataset round trips", bad == 0, detail.str());
}

// ----- criterion 8: edge handling ----------------------------------------------
void criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream why;

    {  // blue empty: unbounded in all six directions
        std::vector<Point3> red = {{0, 0, 0}, {1, 2, 3}};
        std::vector<Point3> blue;
        SolveResult r = solve(red, blue);
        OracleResult o = solve_bruteforce(red, blue);
        if (r.bounded || o.bounded || r.unbounded_directions.size() != 6 ||
            o.unbounded_directions.size() != 6) {
            ok = false;
            why << "[empty blue] ";
        }
    }
    {  // single red point: degenerate s_min still solves and matches oracle
        std::vector<Point3> red = {{0.5, 0.5, 0.5}};
        std::vector<Point3> blue = {{2, 0.5, 0.5},  {-1, 0.5, 0.5}, {0.5, 2, 0.5},
                                    {0.5, -1, 0.5}, {0.5, 0.5, 2},  {0.5, 0.5, -1},
                                    {1.2, 1.4, 1.6}, {-0.3, -0.2, 1.1}};
        SolveResult r = solve(red, blue);
        OracleResult o = solve_bruteforce(red, blue);
        if (!r.bounded || !o.bounded || volume(r.best->box) != o.best_volume) {
            ok = false;
            why << "[single red] ";
        }
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            GenSpec gs{"uniform-annulus", 1, 2 + seed % 11, seed ^ 0x8888, 4};
            Dataset ds = generate(gs);
            SolveResult rr = solve(ds.red, ds.blue);
            OracleResult oo = solve_bruteforce(ds.red, ds.blue);
            bool match = rr.bounded == oo.bounded &&
                         (!rr.bounded || volume(rr.best->box) == oo.best_volume);
            if (!match) {
                ok = false;
                why << "[single red seed " << seed << "] ";
                break;
            }
        }
    }
    {  // blue on an s_min face clamps s_max at distance zero
        std::vector<Point3> red = {{0, 0, 0}, {1, 1, 1}};
        std::vector<Point3> blue = {{1, 0.5, 0.5}};
        Scene s = build_scene(red, blue);
        if (s.s_max.hi[0] != 1 || !s.retained.empty() || s.discarded_outside != 1) {
            ok = false;
            why << "[face clamp] ";
        }
        Box3 sx = compute_smax(Box3{{0, 0, 0}, {1, 1, 1}},
                               std::vector<Point3>{{1, 0.5, 0.5}});
        if (sx.hi[0] != 1) {
            ok = false;
            why << "[compute_smax clamp] ";
        }
    }
    std::ostringstream detail;
    detail << (why.str().empty() ? "all edge cases hold" : why.str()) << ", "
           << seconds_since(t0) << "s";
    report(8, "edge handling (empty blue, single red, face clamps)", ok, detail.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0) std::printf("acceptance: all criteria PASS\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
