#include "garside/period.h"

#include <numeric>
#include <stdexcept>

#include "garside/dynamics.h"

namespace garside {

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

PeriodReport sc_sequence(const NormalForm& x, int N, const EnumerateOptions& options) {
  if (N < 1) throw std::invalid_argument("horizon must be positive");
  if (!is_rigid(x)) throw std::invalid_argument("sc_sequence needs a rigid element, got " + to_string(x));
  PeriodReport r;
  r.base = x;
  r.horizon = N;
  for (int n = 1; n <= N; ++n) {
    const SCSet sc = enumerate_sc(power(x, n), options);
    const auto primes = prime_divisors(n);
    std::size_t primitive = 0;
    for (const NormalForm& y : sc.elements()) {
      bool is_power = false;
      for (int d : primes)
        if (root_of_rigid(y, d)) {
          is_power = true;
          break;
        }
      if (!is_power) ++primitive;
    }
    r.sizes.push_back(sc.size());
    r.primitive_counts.push_back(primitive);
    if (primitive > 0) {
      r.primitive_levels.push_back(n);
      r.rstar = std::lcm(r.rstar, n);
    }
  }
  r.sums_consistent = true;
  r.divisor_monotone = true;
  for (int n = 1; n <= N; ++n) {
    std::size_t sum = 0;
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      sum += r.primitive_counts[k - 1];
      if (r.sizes[k - 1] > r.sizes[n - 1]) r.divisor_monotone = false;
    }
    if (sum != r.sizes[n - 1]) r.sums_consistent = false;
  }
  r.periodic_verified = true;
  for (int n = r.rstar + 1; n <= N; ++n)
    if (r.sizes[n - 1] != r.sizes[n - 1 - r.rstar]) r.periodic_verified = false;
  return r;
}

}  // namespace garside
