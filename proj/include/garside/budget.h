#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

/// Iteration and size caps for the dynamics and enumeration routines.
struct Budget {
  std::size_t max_slides = 100000;
  std::size_t max_elements = 5000000;

  /// Defaults overridden by GARSIDE_BUDGET, which is either a single integer
  /// (applied to both caps) or "slides=N,elements=M" (either key optional).
  static Budget from_env();
  /// Same syntax as GARSIDE_BUDGET; throws std::invalid_argument.
  static Budget parse(const std::string& text);
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace garside
