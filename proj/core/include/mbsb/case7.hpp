#pragma once

#include <optional>
#include <utility>

#include "mbsb/candidates.hpp"
#include "mbsb/smawk.hpp"

namespace mbsb {

/// Pairs (p, q) of corner-staircase points that can support faces.first and
/// faces.second of one box simultaneously: each point lies strictly within
/// the bound pinned by the other. The reference implementation filters all
/// ordered pairs by that predicate; the accelerated one walks adjacency in
/// the projected staircase (a subset, sufficient for the tensor rows/cols).
std::vector<std::pair<std::int32_t, std::int32_t>> enumerate_pairs(
    const Scene& scene, const Staircases& stairs, RegionId corner,
    std::pair<Direction, Direction> faces, bool accelerated = false);

struct Case7Stats {
    std::uint64_t layers = 0;
    std::uint64_t smawk_evals = 0;
    double worst_eval_ratio = 0;  // max over layers of evals / (rows + cols)
    std::uint64_t monotonicity_violations = 0;
};

/// Reference semantics: explicit triple loop over (row pair, column pair,
/// free-face completion) across all halfspace orientations, each candidate
/// completed and certified.
std::vector<CandidateBox> enumerate_case7_direct(const Scene& scene, const Staircases& stairs,
                                                 const GrowthEngine& eng);

/// Layered row-maxima path: per orientation and per free-pair layer, the
/// volume tensor slice is transformed to rectangle areas (row-constant
/// factors drop out), padded outside each row's contiguous defined span,
/// and swept with smawk. Winners are certified; each layer's best quadruple
/// is additionally re-completed through the exact free-pair frontier.
/// check_monotone samples random 2x2 defined submatrices and records
/// violations of the total-monotonicity implication.
std::optional<CandidateBox> enumerate_case7_fast(const Scene& scene, const Staircases& stairs,
                                                 const PointerTable& ptrs,
                                                 const GrowthEngine& eng,
                                                 Case7Stats* stats = nullptr,
                                                 bool check_monotone = false);

/// All maximal completions (value on fa, value on fb) of a box whose other
/// four bounds are pinned; fa and fb lie on different axes.
std::vector<std::pair<double, double>> free_pair_frontier(const Scene& scene, const Box3& pinned,
                                                          Direction fa, Direction fb);

}  // namespace mbsb
