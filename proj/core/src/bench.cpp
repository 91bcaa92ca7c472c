#include "mbsb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "mbsb/dataset.hpp"
#include "mbsb/oracle.hpp"

namespace mbsb {

namespace {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t x = base ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xbf58476d1ce4e5b9ull) ^
                      (c * 0x94d049bb133111ebull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

}  // namespace

void write_record(std::ostream& csv, const BenchRecord& r) {
    csv << r.generator << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.mode << ','
        << r.phase_preprocess_ns << ',' << r.phase_structures_ns << ',' << r.phase_cases_ns << ','
        << r.total_ns << ',' << (std::isinf(r.volume) ? "inf" : format_double(r.volume)) << ','
        << r.case_label << '\n';
}

std::vector<BenchRecord> run_bench(const BenchSweep& sweep, std::ostream& csv) {
    std::vector<BenchRecord> out;
    csv << bench_csv_header << '\n';

    std::vector<std::size_t> ms = sweep.m_values.empty() ? std::vector<std::size_t>{}
                                                         : sweep.m_values;
    std::vector<std::size_t> ns = sweep.n_values;
    if (ms.empty() && ns.empty()) return out;
    if (ms.empty()) ms = {50};
    if (ns.empty()) ns = {1000};

    for (std::size_t m : ms) {
        for (std::size_t n : ns) {
            for (std::size_t rep = 0; rep < sweep.reps; ++rep) {
                BenchRecord r;
                r.generator = sweep.generator;
                r.n = n;
                r.m = m;
                r.mode = sweep.mode;
                r.seed = mix_seed(sweep.seed, m, n, rep);
                try {
                    GenSpec gs{sweep.generator, n, m, r.seed, sweep.grid};
                    Dataset ds = generate(gs);
                    const std::uint64_t t0 = now_ns();
                    if (sweep.mode == "oracle") {
                        OracleResult orc = solve_bruteforce(ds.red, ds.blue);
                        r.total_ns = now_ns() - t0;
                        r.volume = orc.bounded ? orc.best_volume : inf;
                        r.case_label = orc.bounded ? "oracle" : "unbounded";
                    } else {
                        SolveResult sr = solve(ds.red, ds.blue);
                        r.total_ns = now_ns() - t0;
                        r.phase_preprocess_ns = sr.stats.preprocess_ns;
                        r.phase_structures_ns = sr.stats.structures_ns;
                        r.phase_cases_ns = sr.stats.cases_ns;
                        r.volume = sr.bounded ? volume(sr.best->box) : inf;
                        r.case_label =
                            sr.bounded ? case_label_name(sr.best->label) : "unbounded";
                    }
                } catch (const std::exception& e) {
                    r.case_label = std::string("error:") + e.what();
                }
                write_record(csv, r);
                out.push_back(r);
            }
        }
    }
    return out;
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& xy) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t k = 0;
    for (auto [x, y] : xy) {
        if (x <= 0 || y <= 0) continue;
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++k;
    }
    if (k < 2) return 0;
    const double denom = static_cast<double>(k) * sxx - sx * sx;
    if (denom == 0) return 0;
    return (static_cast<double>(k) * sxy - sx * sy) / denom;
}

std::string slope_summary(const std::vector<BenchRecord>& records) {
    auto median_by = [&](auto key) {
        std::map<std::size_t, std::vector<double>> groups;
        for (const BenchRecord& r : records)
            if (r.total_ns > 0) groups[key(r)].push_back(static_cast<double>(r.total_ns));
        std::vector<std::pair<double, double>> xy;
        for (auto& [k, v] : groups) {
            std::sort(v.begin(), v.end());
            xy.push_back({static_cast<double>(k), v[v.size() / 2]});
        }
        return xy;
    };

    std::ostringstream out;
    auto by_m = median_by([](const BenchRecord& r) { return r.m; });
    auto by_n = median_by([](const BenchRecord& r) { return r.n; });
    if (by_m.size() >= 2)
        out << "slope log(time) vs log(m): " << format_double(fit_loglog_slope(by_m)) << "\n";
    if (by_n.size() >= 2)
        out << "slope log(time) vs log(n): " << format_double(fit_loglog_slope(by_n)) << "\n";
    return out.str();
}

}  // namespace mbsb
