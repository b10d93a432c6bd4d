#pragma once

// Self-contained verification suite covering the headline numeric claims:
// sequence tables, enumeration/recurrence agreement, dimension closed
// forms, congruences, orbit periods, phase/cocycle properties, winding
// numbers, the commutator pipeline, Burau/Squier analysis, and the
// central obstruction.  Each criterion reports one pass/fail line.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pseudou::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // headline numbers, or the first failure
  double seconds = 0.0;
};

std::vector<CriterionResult> run_all(std::uint64_t seed = 20240817);

// One line per criterion plus a summary; returns the number of failures.
int report(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace pseudou::acceptance
