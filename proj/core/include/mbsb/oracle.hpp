#pragma once

#include <cstdint>
#include <span>

#include "mbsb/candidates.hpp"

namespace mbsb {

/// Ground truth from exhaustive enumeration of face-flush boxes.
struct OracleResult {
    bool bounded = false;
    Box3 box;                                  // maximal optimum when bounded
    double best_volume = 0;
    std::vector<Direction> unbounded_directions;
    std::uint64_t candidates_examined = 0;
};

/// Exhaustive maximum separating box. Every maximal box has each face at the
/// s_max bound or flush with a retained blue coordinate beyond the matching
/// s_min face; the enumeration walks all x/y face 4-tuples and completes z
/// by forced maximal growth. Hard cap: throws oracle_cap_exceeded when the
/// blue set exceeds 14 points.
OracleResult solve_bruteforce(std::span<const Point3> red, std::span<const Point3> blue);

/// True iff re-growing the box (linear-scan growth) changes no bound.
/// Precondition: s_min inside box, open interior free of retained points.
bool check_maximal(const Scene& scene, const Box3& box);

}  // namespace mbsb
