#pragma once

#include <vector>

#include "garside/sliding_circuits.h"

namespace garside {

/// Sizes of SC(xⁿ) for n = 1..N together with their primitive decomposition.
/// Vectors are indexed by n - 1.
struct PeriodReport {
  NormalForm base;
  int horizon = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> primitive_counts;
  /// Levels n ≤ N with at least one primitive element of SC(xⁿ).
  std::vector<int> primitive_levels;
  /// lcm of the primitive levels.
  int rstar = 1;
  /// sₙ = Σ_{k|n} primitive(k) for every n ≤ N.
  bool sums_consistent = false;
  /// n | m ≤ N implies sₙ ≤ sₘ.
  bool divisor_monotone = false;
  /// sₙ = s_{n-r*} for every r* < n ≤ N.
  bool periodic_verified = false;
};

/// Requires a rigid x (std::invalid_argument). Budget overruns propagate as
/// BudgetExceeded.
PeriodReport sc_sequence(const NormalForm& x, int N, const EnumerateOptions& options = {});

}  // namespace garside
