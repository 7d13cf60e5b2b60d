#pragma once

#include <memory>
#include <span>
#include <vector>

#include "garside/context.h"

namespace garside {

/// Garside's structure on B_m: simples are permutation braids, ordered by the
/// weak order (inversion-set inclusion). Simple ids are lexicographic ranks of
/// the underlying permutations, so the identity is 0 and Δ is m!-1.
class ClassicalContext final : public Context {
 public:
  static constexpr int kDefaultMaxStrands = 9;

  explicit ClassicalContext(int strands);

  /// σ_i for 1 ≤ i < m.
  Simple generator(int i) const;
  /// Lexicographically smallest positive word (generator indices) of s.
  std::vector<int> word(Simple s) const;

  Simple meet(Simple a, Simple b) const override;
  bool is_prefix(Simple a, Simple b) const override;
  std::string render(Simple s) const override;

 protected:
  std::optional<Simple> lookup(PackedPerm p) const override;
};

/// Builds B_m with the classical structure; throws std::out_of_range unless
/// 2 ≤ m ≤ max_strands.
std::shared_ptr<const ClassicalContext> classical_context(
    int m, int max_strands = ClassicalContext::kDefaultMaxStrands);

}  // namespace garside
