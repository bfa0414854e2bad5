#pragma once

#include "conesing/enumeration.hpp"
#include "conesing/resolution.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace conesing::cli {

struct CheckResult {
  std::string name;
  bool passed;
  std::string expected;
  std::string actual;
};

struct PaperCheckReport {
  std::vector<CheckResult> results;

  bool passed() const;
  std::size_t failures() const;
};

struct PaperCheckConfig {
  /// Graph solver used by the cone-over-rational-curve checks; swapped out by negative controls.
  std::function<DiscrepancyReport(const DualGraph&)> solver = discrepancies;
  /// Forwarded to enumerate_catalog.
  std::int64_t a_infinity_shift = 0;
};

/// Members of the class (mld >= epsilon0, isotropy <= N) found by sweeping every divisor
/// with fractional parts of denominator <= N at 0, 1, inf and degree <= 2/epsilon0 + 3 that
/// are absent from `catalog`, as canonical divisor strings.
std::vector<std::string> missing_from_catalog(const Catalog& catalog);

/// Regression suite: cones over rational curves of degree 2..50, A_n plt blow-ups for
/// n = 1..20, the Tjurina family for n = 4..8, and catalog consistency plus completeness
/// for (1,1), (1,2), (1/2,1), (1/2,2).
PaperCheckReport paper_check(const PaperCheckConfig& config = {});

}  // namespace conesing::cli
