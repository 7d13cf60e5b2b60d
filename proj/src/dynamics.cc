#include "garside/dynamics.h"

#include <map>
#include <stdexcept>
#include <vector>

namespace garside {

Simple iota(const NormalForm& x) {
  if (x.is_delta_power()) throw std::domain_error("Δ-power has no initial factor");
  return x.context()->tau(x.factors().front(), -x.inf());
}

Simple phi(const NormalForm& x) {
  if (x.is_delta_power()) throw std::domain_error("Δ-power has no final factor");
  return x.factors().back();
}

bool is_rigid(const NormalForm& x) {
  if (x.is_delta_power()) return true;
  return x.context()->is_left_weighted(phi(x), iota(x));
}

NormalForm cycling(const NormalForm& x) {
  const Simple i = iota(x);
  if (!is_rigid(x)) return conjugate(x, i);
  std::vector<Simple> f(x.factors().begin() + 1, x.factors().end());
  f.push_back(i);
  return NormalForm::adopt(x.context(), x.inf(), std::move(f));
}

std::set<NormalForm> orbit(const NormalForm& x, const Budget& budget) {
  std::set<NormalForm> seen{x};
  if (x.is_delta_power()) return seen;
  std::vector<NormalForm> stack{x};
  while (!stack.empty()) {
    const NormalForm y = std::move(stack.back());
    stack.pop_back();
    for (NormalForm z : {cycling(y), tau_conj(y, 1)}) {
      if (seen.insert(z).second) {
        if (seen.size() > budget.max_elements) throw BudgetExceeded("orbit exceeds the element budget");
        stack.push_back(std::move(z));
      }
    }
  }
  return seen;
}

Simple preferred_prefix(const NormalForm& x) {
  const Context& ctx = *x.context();
  return ctx.meet(iota(x), ctx.complement(phi(x)));
}

NormalForm cyclic_slide(const NormalForm& x) { return conjugate(x, preferred_prefix(x)); }

SlideResult slide_to_circuit(const NormalForm& x, const Budget& budget) {
  if (x.is_delta_power()) return {x, 0, 1};
  std::map<NormalForm, int> seen;
  NormalForm y = x;
  for (int step = 0;; ++step) {
    auto [it, inserted] = seen.emplace(y, step);
    if (!inserted) return {it->first, it->second, step - it->second};
    if (static_cast<std::size_t>(step) >= budget.max_slides)
      throw BudgetExceeded("cyclic sliding did not close a circuit within " + std::to_string(budget.max_slides) +
                           " steps");
    if (y.is_delta_power()) return {y, step, 1};
    y = cyclic_slide(y);
  }
}

std::optional<int> rigid_exponent(const NormalForm& y, int bound) {
  if (bound < 1) throw std::invalid_argument("rigid_exponent bound must be positive");
  std::vector<bool> rigid(static_cast<std::size_t>(bound) + 1, false);
  NormalForm p = y;
  for (int n = 1; n <= bound; ++n) {
    if (n > 1) p = multiply(p, y);
    rigid[n] = is_rigid(p);
  }
  std::optional<int> r;
  for (int n = 1; n <= bound && !r; ++n)
    if (rigid[n]) r = n;
  if (r)
    for (int n = 1; n <= bound; ++n)
      if (rigid[n] != (n % *r == 0))
        throw std::logic_error("rigid powers of " + to_string(y) + " are not the multiples of " + std::to_string(*r));
  return r;
}

std::optional<NormalForm> root_of_rigid(const NormalForm& x, int d) {
  if (d < 1) throw std::invalid_argument("root degree must be positive");
  if (x.inf() % d != 0) return std::nullopt;
  const int q = x.inf() / d;
  const auto& f = x.factors();
  if (f.size() % static_cast<std::size_t>(d) != 0) return std::nullopt;
  const std::size_t len = f.size() / static_cast<std::size_t>(d);
  const Context& ctx = *x.context();
  std::vector<Simple> z(f.end() - static_cast<std::ptrdiff_t>(len), f.end());
  for (int j = 0; j < d; ++j)
    for (std::size_t i = 0; i < len; ++i)
      if (f[static_cast<std::size_t>(j) * len + i] != ctx.tau(z[i], q * (d - 1 - j))) return std::nullopt;
  NormalForm root = NormalForm::adopt(x.context(), q, std::move(z));
  if (!is_rigid(root)) return std::nullopt;
  return root;
}

}  // namespace garside
