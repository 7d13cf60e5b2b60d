#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "garside/context.h"

namespace garside {

/// Birman–Ko–Lee structure on B_m*: simples are non-crossing partitions of the
/// punctures 1..m (placed counterclockwise around a disk), prefix order is
/// refinement, δ is the one-block partition. A block {i₁<…<i_k} acts as the
/// cycle i₁→i₂→…→i_k→i₁.
///
/// For m = 4 the atoms have letter names (punctures counterclockwise from the
/// bottom-left corner): S={1,2}, E={2,3}, N={3,4}, W={1,4}, A={1,3}, M={2,4}.
class DualContext final : public Context {
 public:
  static constexpr int kDefaultMaxStrands = 7;
  using Blocks = std::vector<std::vector<int>>;

  explicit DualContext(int strands);

  /// Blocks of s (1-based punctures), sorted; includes singletons.
  Blocks blocks(Simple s) const;
  /// The simple with the given blocks; unlisted punctures become singletons.
  /// Throws std::invalid_argument on crossing or overlapping blocks.
  Simple from_blocks(const Blocks& blocks) const;
  /// The band generator joining punctures i and j.
  Simple band(int i, int j) const;
  /// One of S,E,N,W,A,M (m = 4 only) or D for δ.
  Simple letter(char c) const;

  Simple meet(Simple a, Simple b) const override;
  bool is_prefix(Simple a, Simple b) const override;
  std::string render(Simple s) const override;

 protected:
  std::optional<Simple> lookup(PackedPerm p) const override;

 private:
  std::vector<Blocks> blocks_;
  std::vector<std::uint16_t> meet_table_;
  std::vector<std::pair<PackedPerm, std::uint32_t>> index_;  // sorted by perm
};

/// Builds B_m* with the dual structure; throws std::out_of_range unless
/// 2 ≤ m ≤ max_strands.
std::shared_ptr<const DualContext> dual_context(int m, int max_strands = DualContext::kDefaultMaxStrands);

/// True when no two blocks interleave (a<b<c<d, a,c in one block, b,d in another).
bool is_non_crossing(const DualContext::Blocks& blocks);

}  // namespace garside
