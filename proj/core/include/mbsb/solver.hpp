#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "mbsb/case7.hpp"
#include "mbsb/oracle.hpp"

namespace mbsb {

struct SolveOptions {
    bool fast_grow = true;   // staircase-accelerated growth vs. linear-scan reference
    bool case7_fast = true;  // layered row-maxima path vs. direct triple loop
    std::array<bool, 9> case_enabled = {false, true, true, true, true,
                                        true,  true, true, true};  // index 1..8
    bool supplementary_enabled = true;
    bool slab_enabled = true;
    std::size_t slab_max_m = 24;
    bool check_monotonicity = false;

    bool enabled(int k) const { return case_enabled[static_cast<std::size_t>(k)]; }
};

struct SolveStats {
    std::size_t m_retained = 0;
    std::size_t discarded_inside = 0;
    std::size_t discarded_outside = 0;
    std::map<std::string, std::uint64_t> candidates;  // per case label
    Case7Stats case7;
    std::uint64_t preprocess_ns = 0;
    std::uint64_t structures_ns = 0;
    std::uint64_t cases_ns = 0;
};

struct SolveResult {
    bool bounded = false;
    std::optional<CandidateBox> best;  // set iff bounded
    std::vector<Direction> unbounded_directions;
    SolveStats stats;

    double best_volume() const { return best ? volume(best->box) : inf; }
};

SolveResult solve(std::span<const Point3> red, std::span<const Point3> blue,
                  const SolveOptions& options = {});

/// Variant over an already-built scene (the CLI and benches reuse it).
SolveResult solve_scene(const Scene& scene, const SolveOptions& options = {});

}  // namespace mbsb
