#pragma once

#include <string>
#include <vector>

#include "fitkit/fitting.hpp"

namespace fitkit::cli {

enum class Format { Text, Json };

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;  // always set on failure
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  std::vector<std::string> notes;
  double seconds = -1;  // negative: not reported

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool all_passed() const { return failed() == 0 && !cases.empty(); }
};

/// "order 4: (1 2)(3 4), (1 3)(2 4)"
std::string describe(const FiniteGroup& H);
/// Both sides of a failed comparison.
std::string describe_pair(const char* lhs_name, const FiniteGroup& lhs, const char* rhs_name,
                          const FiniteGroup& rhs);

std::string render_analysis(const FittingReport& r, Format f);
std::string render_suite(const SuiteReport& r, Format f);

}  // namespace fitkit::cli
