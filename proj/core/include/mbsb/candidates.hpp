#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mbsb/staircase.hpp"

namespace mbsb {

/// What blocks a face of a candidate box from growing further.
struct Support {
    enum class Kind : std::uint8_t { blue_point, smax_bound, unbounded };
    Kind kind = Kind::unbounded;
    std::int32_t point = -1;  // retained index when kind == blue_point

    static Support blue(std::int32_t i) { return Support{Kind::blue_point, i}; }
    static Support smax() { return Support{Kind::smax_bound, -1}; }
    static Support none() { return Support{Kind::unbounded, -1}; }

    friend bool operator==(const Support&, const Support&) = default;
};

enum class CaseLabel : std::uint8_t {
    case1 = 1,
    case2,
    case3,
    case4,
    case5,
    case6,
    case7,
    case8,
    trivial,        // pure growth from s_min (covers the empty-annulus scene)
    supplementary,  // configurations outside the eight published patterns
    oracle,
};
const char* case_label_name(CaseLabel c);

/// A maximal separating box: contains s_min, within s_max, open interior
/// free of retained blue points, and blocked in all six directions.
struct CandidateBox {
    Box3 box;
    std::array<Support, 6> supports{};  // indexed by static_cast<int>(Direction)
    CaseLabel label = CaseLabel::trivial;

    const Support& support(Direction d) const { return supports[static_cast<std::size_t>(d)]; }
    Support& support(Direction d) { return supports[static_cast<std::size_t>(d)]; }
};

struct GrowResult {
    double bound = 0;
    Support support;
};

/// Largest bound in direction d keeping the open interior free of retained
/// points, with the blocking support. Reference implementation: linear scan
/// over all retained points.
GrowResult grow_reference(const Scene& scene, const Box3& box, Direction d);

/// Same contract, accelerated through the per-region sorted staircase views.
GrowResult grow_fast(const Scene& scene, const Staircases& stairs, const Box3& box, Direction d);

struct GrowthEngine {
    const Scene* scene = nullptr;
    const Staircases* stairs = nullptr;
    bool fast = true;

    GrowResult grow(const Box3& box, Direction d) const {
        return fast ? grow_fast(*scene, *stairs, box, d) : grow_reference(*scene, box, d);
    }
};

/// True iff no retained point lies strictly inside the box. Requires
/// s_min inside box.
bool open_interior_free(const Scene& scene, const Staircases& stairs, const Box3& box);

/// Grows the partial box in the given direction order and returns the
/// completed candidate with all six supports re-derived. Throws
/// unbounded_result if any growth never terminates.
CandidateBox complete(const GrowthEngine& eng, Box3 partial, std::span<const Direction> order,
                      CaseLabel label = CaseLabel::trivial);

/// Independent maximality check: re-growing the box in every direction
/// changes nothing. Returns the certified candidate (supports re-derived)
/// or nullopt. check_empty additionally verifies the open interior.
std::optional<CandidateBox> certify(const GrowthEngine& eng, const Box3& box, CaseLabel label,
                                    bool check_empty);

/// Support-location profile checks. Halfspace membership of a blue support
/// is strict (the point lies strictly beyond the face plane of s_min);
/// s_max supports have no location. Universal constraints hold for every
/// maximal box: at most 5 support slots per halfspace, at most 3 per corner
/// region.
bool universal_support_constraints(const Scene& scene, const CandidateBox& cb);
bool matches_case_pattern(const Scene& scene, const CandidateBox& cb, int case_k);

/// Case enumerators for the published patterns other than case 7. Every
/// emitted box is certified maximal and matches the case's support pattern.
std::vector<CandidateBox> enumerate_case(const Scene& scene, const Staircases& stairs,
                                         const PointerTable& ptrs, const GrowthEngine& eng, int k);

/// Pure growth from s_min in the canonical direction order; the always-on
/// baseline candidate (equals s_max when the annulus is empty).
std::optional<CandidateBox> trivial_candidate(const GrowthEngine& eng);

/// Cross-region pair seeds covering maximal boxes whose support pattern
/// falls outside the eight published cases.
std::vector<CandidateBox> enumerate_supplementary(const Scene& scene, const Staircases& stairs,
                                                  const GrowthEngine& eng);

/// Exhaustive slab enumeration, enabled only for small retained sets: every
/// maximal box is the forced-y completion of some (z-slab, x-interval) pair
/// of face-flush bounds. Guarantees oracle parity at verification scale.
std::vector<CandidateBox> enumerate_slabs(const Scene& scene, const Staircases& stairs,
                                          const GrowthEngine& eng, std::size_t max_m = 24);

}  // namespace mbsb
