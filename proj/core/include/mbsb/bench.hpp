#pragma once

#include <iosfwd>

#include "mbsb/generators.hpp"
#include "mbsb/solver.hpp"

namespace mbsb {

struct BenchRecord {
    std::string generator;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string mode;  // fast | oracle
    std::uint64_t phase_preprocess_ns = 0;
    std::uint64_t phase_structures_ns = 0;
    std::uint64_t phase_cases_ns = 0;
    std::uint64_t total_ns = 0;
    double volume = 0;  // +inf when unbounded
    std::string case_label;
};

struct BenchSweep {
    std::string generator = "sparse-blockers";
    std::vector<std::size_t> m_values;
    std::vector<std::size_t> n_values;
    std::size_t reps = 3;
    std::string mode = "fast";
    std::uint64_t seed = 1;
    int grid = 4;
};

inline constexpr const char* bench_csv_header =
    "generator,seed,n,m,mode,phase_preprocess_ns,phase_structures_ns,phase_cases_ns,total_ns,"
    "volume,case_label";

/// Runs the sweep (cartesian product of m and n lists, reps each), writing
/// one CSV row per run to `csv`. Per-row solver errors are recorded in the
/// case_label column, not fatal. Returns all records.
std::vector<BenchRecord> run_bench(const BenchSweep& sweep, std::ostream& csv);

void write_record(std::ostream& csv, const BenchRecord& r);

/// Least-squares slope of log(y) vs log(x); pairs with non-positive entries
/// are skipped. Returns 0 for fewer than two usable points.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& xy);

/// Median total time per swept value, slope summary lines as printed by the
/// CLI after a sweep.
std::string slope_summary(const std::vector<BenchRecord>& records);

}  // namespace mbsb
