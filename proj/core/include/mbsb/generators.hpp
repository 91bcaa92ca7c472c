#pragma once

#include "mbsb/dataset.hpp"

namespace mbsb {

struct GenSpec {
    std::string generator;  // uniform-annulus | clustered-corners | grid-degenerate | sparse-blockers
    std::size_t n = 0;      // red count
    std::size_t m = 0;      // blue count
    std::uint64_t seed = 0;
    int grid = 4;           // grid-degenerate cell count per axis
};

/// Deterministic instance generation (same spec, same dataset, any platform).
///  - uniform-annulus: red in an inner box, blue in the shell around it
///  - clustered-corners: blue clumped near the eight outer corners
///  - grid-degenerate: all coordinates snapped to a small integer grid
///  - sparse-blockers: six planted corridor blockers guarantee a bounded
///    s_max; remaining blue points avoid the face corridors (m >= 6)
/// Throws unknown_generator / invalid_parameters.
Dataset generate(const GenSpec& spec);

}  // namespace mbsb
