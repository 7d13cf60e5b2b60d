#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace garside {

/// Handle to a simple element (a divisor of the Garside element) interned in
/// a Context. Only meaningful together with the context that produced it.
struct Simple {
  std::uint32_t id = 0;

  friend constexpr bool operator==(Simple, Simple) = default;
  friend constexpr auto operator<=>(Simple, Simple) = default;
};

enum class Kind { Classical, Dual };

/// Permutation of at most 15 points packed four bits per image.
using PackedPerm = std::uint64_t;

/// A Garside structure on the m-strand braid group with all simples interned.
///
/// Every simple is stored with its underlying permutation. Products follow the
/// left-to-right convention: the permutation of a·b sends i to perm(b)[perm(a)[i]].
/// Complement, τ and weight are tabulated at construction; meet and the prefix
/// test are supplied by the concrete structure.
class Context {
 public:
  virtual ~Context() = default;
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  Kind kind() const noexcept { return kind_; }
  int strands() const noexcept { return strands_; }
  /// "A:m" or "dual:m".
  std::string name() const;

  std::size_t simple_count() const noexcept { return perms_.size(); }
  Simple identity() const noexcept { return identity_; }
  Simple delta() const noexcept { return delta_; }
  const std::vector<Simple>& atoms() const noexcept { return atoms_; }
  /// Number of atoms in any factorization of the Garside element.
  int delta_weight() const noexcept { return weights_[delta_.id]; }
  /// Smallest e > 0 with Δ^e central, i.e. τ^e the identity on simples.
  int central_power() const noexcept { return central_power_; }

  bool contains(Simple s) const noexcept { return s.id < perms_.size(); }
  int weight(Simple s) const;
  /// ∂s, the simple with s·∂s = Δ.
  Simple complement(Simple s) const;
  /// Δ^{-k} s Δ^{k}; any integer k.
  Simple tau(Simple s, int k = 1) const;

  /// Greatest common prefix under ≼.
  virtual Simple meet(Simple a, Simple b) const = 0;
  /// a ≼ b.
  virtual bool is_prefix(Simple a, Simple b) const = 0;

  /// a·b when the product is again simple, nullopt otherwise.
  std::optional<Simple> product(Simple a, Simple b) const;
  /// a^{-1}·b; requires a ≼ b.
  Simple left_quotient(Simple a, Simple b) const;

  bool is_left_weighted(Simple a, Simple b) const;
  /// One normalization step: (a·t, t^{-1}·b) with t = b ∧ ∂a.
  std::pair<Simple, Simple> local_slide(Simple a, Simple b) const;

  /// All c with 1 ≼ c ≼ s, sorted by id.
  std::vector<Simple> prefixes(Simple s) const;
  /// All c with 1 ≺ c ≺ s.
  std::vector<Simple> strict_nontrivial_prefixes(Simple s) const;
  /// Every simple, in id order.
  std::vector<Simple> simples() const;

  PackedPerm permutation(Simple s) const;
  /// Textual form of one factor (digits for classical, letters/blocks for dual).
  virtual std::string render(Simple s) const = 0;

 protected:
  Context(Kind kind, int strands);

  /// Installs the simples and builds the derived tables. `perms[0]` must be the
  /// identity; `delta` is the index of the Garside element.
  void install(std::vector<PackedPerm> perms, std::vector<int> weights, Simple delta,
               std::vector<Simple> atoms);
  virtual std::optional<Simple> lookup(PackedPerm p) const = 0;
  void check(Simple s) const;

 private:
  Kind kind_;
  int strands_;
  std::vector<PackedPerm> perms_;
  std::vector<int> weights_;
  std::vector<Simple> complement_;
  std::vector<std::vector<Simple>> tau_pow_;
  std::vector<Simple> atoms_;
  Simple identity_{0};
  Simple delta_{0};
  int central_power_ = 1;
};

using ContextPtr = std::shared_ptr<const Context>;

namespace perm {

constexpr int kMaxPoints = 15;

inline int at(PackedPerm p, int i) noexcept { return static_cast<int>((p >> (4 * i)) & 0xFu); }
inline PackedPerm set(PackedPerm p, int i, int v) noexcept {
  return (p & ~(PackedPerm{0xF} << (4 * i))) | (PackedPerm(v) << (4 * i));
}
PackedPerm identity(int n) noexcept;
/// Left-to-right composition: first a, then b.
PackedPerm then(PackedPerm a, PackedPerm b, int n) noexcept;
PackedPerm inverse(PackedPerm a, int n) noexcept;
PackedPerm from_images(const std::vector<int>& images);
std::vector<int> images(PackedPerm p, int n);

}  // namespace perm

}  // namespace garside

template <>
struct std::hash<garside::Simple> {
  std::size_t operator()(garside::Simple s) const noexcept { return std::hash<std::uint32_t>{}(s.id); }
};
