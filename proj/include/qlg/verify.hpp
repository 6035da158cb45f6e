#pragma once

// Whole-toolkit verification: every module invariant at its pinned tolerance.
// The CLI `verify` experiment and the acceptance binary both run this suite;
// the acceptance binary groups the results into one line per criterion.

#include <cstdint>
#include <string>
#include <vector>

#include "qlg/report.hpp"

namespace qlg {

/// One named criterion group: its member checks all share the group index.
struct CriterionGroup {
  int index = 0;              // 1-based, stable
  std::string title;          // short human description
  std::vector<CheckResult> checks;
  bool pass() const;
};

/// Run every check. Deterministic for a fixed seed.
std::vector<CriterionGroup> run_verification_suite(std::uint64_t seed = 1);

/// Flatten groups into report check rows (named "criterionN/check").
std::vector<CheckResult> flatten(const std::vector<CriterionGroup>& groups);

}  // namespace qlg
