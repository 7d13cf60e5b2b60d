#pragma once

#include <functional>
#include <string>
#include <vector>

namespace garside {

struct CaseResult {
  bool pass = false;
  std::string detail;
};

/// A reproducible computation with its expected outcome and a time limit.
struct GoldenCase {
  std::string name;
  std::string summary;
  double time_limit_seconds = 0;
  bool heavy = false;
  std::function<CaseResult()> run;
};

struct CaseReport {
  std::string name;
  bool pass = false;
  bool within_time = false;
  double seconds = 0;
  std::string detail;
};

const std::vector<GoldenCase>& golden_cases();

/// Runs one case, catching exceptions into a failed report.
CaseReport run_case(const GoldenCase& c);

}  // namespace garside
