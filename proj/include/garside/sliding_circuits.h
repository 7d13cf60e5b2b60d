#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "garside/budget.h"
#include "garside/normal_form.h"

namespace garside {

/// SC(x) for a rigid x: its rigid conjugates, partitioned into orbits under
/// cycling and τ. Elements are sorted; orbits are ordered by the rendered
/// string of their representative (the smallest such string in the orbit).
class SCSet {
 public:
  SCSet() = default;
  SCSet(ContextPtr ctx, std::vector<NormalForm> elements);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<NormalForm>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(const NormalForm& y) const;
  bool contains(const NormalForm& y) const { return index_of(y).has_value(); }

  std::size_t orbit_count() const noexcept { return orbits_.size(); }
  /// Element indices of orbit k.
  const std::vector<std::size_t>& orbit(std::size_t k) const { return orbits_.at(k); }
  std::size_t orbit_of(std::size_t element) const { return orbit_of_.at(element); }
  const NormalForm& representative(std::size_t k) const { return elements_[representatives_.at(k)]; }

  friend bool operator==(const SCSet& a, const SCSet& b) { return a.elements_ == b.elements_; }

 private:
  ContextPtr ctx_;
  std::vector<NormalForm> elements_;
  std::unordered_map<NormalForm, std::size_t> index_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<std::size_t> orbit_of_;
  std::vector<std::size_t> representatives_;
};

struct EnumerateOptions {
  Budget budget{};
  /// Worker threads for frontier expansion; 0 picks the hardware concurrency.
  unsigned threads = 1;
  /// Expand every element instead of one element per orbit.
  bool expand_all_members = false;
};

/// Breadth-first closure of a rigid x under cycling, τ and conjugation by the
/// prefixes of ι(y) and ∂φ(y), keeping rigid conjugates with the same inf and
/// canonical length. Throws std::invalid_argument for non-rigid x and
/// BudgetExceeded past budget.max_elements.
SCSet enumerate_sc(const NormalForm& x, const EnumerateOptions& options = {});

/// Closure of a rigid x under conjugation by every simple, keeping rigid
/// results. Slow; meant as a cross-check for small groups.
SCSet sc_oracle(const NormalForm& x, const Budget& budget = {});

/// Conjugates z = c⁻¹yc of y by nontrivial prefixes c of `bound` that lie in SC(y),
/// i.e. are rigid with the same inf and canonical length.
std::vector<std::pair<Simple, NormalForm>> rigid_prefix_conjugates(const NormalForm& y, Simple bound);

}  // namespace garside
