#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace rcclab {

struct AcceptanceOptions {
  std::uint64_t seed = 20161201;
  bool extended = false;      // include S_6 in the symmetric-group run
  std::set<int> only;         // empty: all criteria
  std::ostream* log = nullptr;  // progress notes
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// "PASS  3  title: detail (1.23 s)"
std::string format_result(const CriterionResult& r);

}  // namespace rcclab
