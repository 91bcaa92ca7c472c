#pragma once

#include <string>

#include "mbsb/oracle.hpp"
#include "mbsb/scene.hpp"
#include "mbsb/solver.hpp"

namespace mbsb {

/// Canonical JSON document for a solve run: outcome, box bounds, volume,
/// supports, case label and deterministic stats. Floats use shortest
/// round-trip form; repeated runs on the same input are byte-identical.
/// Wall-clock timings are emitted only when include_timings is set.
std::string solve_report_json(const Scene& scene, const SolveResult& result,
                              bool include_timings = false);

std::string oracle_report_json(const Scene& scene, const OracleResult& result);

}  // namespace mbsb
