#include "garside/sliding_circuits.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "garside/dynamics.h"

namespace garside {

SCSet::SCSet(ContextPtr ctx, std::vector<NormalForm> elements) : ctx_(std::move(ctx)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  orbit_of_.assign(elements_.size(), kUnset);
  struct Pending {
    std::string label;
    std::size_t rep;
    std::vector<std::size_t> members;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (orbit_of_[i] != kUnset) continue;
    Pending p;
    for (const NormalForm& y : garside::orbit(elements_[i])) {
      auto it = index_.find(y);
      if (it == index_.end()) throw std::invalid_argument("SC set is not closed under cycling and τ");
      orbit_of_[it->second] = 0;
      p.members.push_back(it->second);
    }
    std::sort(p.members.begin(), p.members.end());
    p.label = to_string(elements_[p.members.front()]);
    p.rep = p.members.front();
    for (std::size_t m : p.members) {
      std::string s = to_string(elements_[m]);
      if (s < p.label) p.label = std::move(s), p.rep = m;
    }
    pending.push_back(std::move(p));
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) { return a.label < b.label; });
  for (std::size_t k = 0; k < pending.size(); ++k) {
    for (std::size_t m : pending[k].members) orbit_of_[m] = k;
    representatives_.push_back(pending[k].rep);
    orbits_.push_back(std::move(pending[k].members));
  }
}

std::optional<std::size_t> SCSet::index_of(const NormalForm& y) const {
  auto it = index_.find(y);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Simple, NormalForm>> rigid_prefix_conjugates(const NormalForm& y, Simple bound) {
  const Context& ctx = *y.context();
  std::vector<std::pair<Simple, NormalForm>> out;
  for (Simple c : ctx.prefixes(bound)) {
    if (c == ctx.identity()) continue;
    NormalForm z = conjugate(y, c);
    if (z.inf() == y.inf() && z.canonical_length() == y.canonical_length() && is_rigid(z))
      out.emplace_back(c, std::move(z));
  }
  return out;
}

namespace {

std::vector<NormalForm> expand(const NormalForm& y) {
  const Context& ctx = *y.context();
  std::vector<NormalForm> out;
  for (Simple bound : {iota(y), ctx.complement(phi(y))})
    for (auto& [c, z] : rigid_prefix_conjugates(y, bound)) out.push_back(std::move(z));
  return out;
}

template <class F>
std::vector<std::vector<NormalForm>> map_frontier(const std::vector<NormalForm>& frontier, unsigned threads, F f) {
  std::vector<std::vector<NormalForm>> results(frontier.size());
  if (threads <= 1 || frontier.size() < 2) {
    for (std::size_t i = 0; i < frontier.size(); ++i) results[i] = f(frontier[i]);
    return results;
  }
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(threads, frontier.size());
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < frontier.size(); i += n) results[i] = f(frontier[i]);
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

SCSet enumerate_sc(const NormalForm& x, const EnumerateOptions& options) {
  if (!is_rigid(x)) throw std::invalid_argument("enumerate_sc needs a rigid element, got " + to_string(x));
  if (x.is_delta_power()) return SCSet(x.context(), {x});
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;

  std::unordered_map<NormalForm, bool> seen;
  std::vector<NormalForm> frontier;
  auto discover = [&](const NormalForm& y) {
    if (seen.count(y)) return;
    for (const NormalForm& z : orbit(y)) {
      seen.emplace(z, true);
      if (options.expand_all_members) frontier.push_back(z);
    }
    if (!options.expand_all_members) frontier.push_back(y);
    if (seen.size() > options.budget.max_elements)
      throw BudgetExceeded("SC enumeration exceeds " + std::to_string(options.budget.max_elements) + " elements");
  };
  discover(x);
  while (!frontier.empty()) {
    std::vector<NormalForm> batch;
    batch.swap(frontier);
    for (auto& found : map_frontier(batch, threads, expand))
      for (const NormalForm& z : found) discover(z);
  }
  std::vector<NormalForm> elements;
  elements.reserve(seen.size());
  for (auto& [y, unused] : seen) elements.push_back(y);
  return SCSet(x.context(), std::move(elements));
}

SCSet sc_oracle(const NormalForm& x, const Budget& budget) {
  if (!is_rigid(x)) throw std::invalid_argument("sc_oracle needs a rigid element, got " + to_string(x));
  const Context& ctx = *x.context();
  const auto simples = ctx.simples();
  std::unordered_map<NormalForm, bool> seen{{x, true}};
  std::vector<NormalForm> stack{x};
  while (!stack.empty()) {
    NormalForm y = std::move(stack.back());
    stack.pop_back();
    for (Simple c : simples) {
      NormalForm z = conjugate(y, c);
      if (!is_rigid(z) || z.inf() != x.inf() || z.canonical_length() != x.canonical_length()) continue;
      if (seen.emplace(z, true).second) {
        if (seen.size() > budget.max_elements) throw BudgetExceeded("oracle closure exceeds the element budget");
        stack.push_back(std::move(z));
      }
    }
  }
  std::vector<NormalForm> elements;
  for (auto& [y, unused] : seen) elements.push_back(y);
  return SCSet(x.context(), std::move(elements));
}

}  // namespace garside
