#pragma once

#include <string>
#include <vector>

#include "volterra/report.hpp"

namespace volterra {

// Preset selection for one verification run. Fast keeps every grid at 500
// for turnaround; Acceptance raises the spectral cross-validation grids to
// 1000 (the sizes the published tolerances were calibrated against) and is
// what the standalone acceptance runner executes; Full doubles the grids
// to 2000 and halves every tolerance that guards a discretization error.
enum class VerifyLevel { Fast, Acceptance, Full };

inline constexpr int kCriteriaCount = 11;

// Aggregated view of one criterion group after a run.
struct CriterionSummary {
  int index;  // 1-based
  std::string title;
  int checks;
  int failures;
};

// Runs all eleven verification groups and returns the flat evidence
// document (command "verify"). Every check name starts with "cNN-", the
// two-digit criterion number, so groups can be re-aggregated afterwards.
ReportDoc run_verification(VerifyLevel level);

// Groups the checks of a verification document by their criterion prefix.
// Checks with an unrecognized prefix are counted under index 0 with an
// empty title (none are produced by run_verification).
std::vector<CriterionSummary> summarize_criteria(const ReportDoc& doc);

const char* verify_level_name(VerifyLevel level);

// Accepts the CLI tokens "fast" and "full"; anything else is a UsageError.
VerifyLevel parse_verify_level(const std::string& token);

}  // namespace volterra
