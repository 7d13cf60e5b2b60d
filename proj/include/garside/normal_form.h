#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "garside/context.h"

namespace garside {

/// Left normal form Δ^inf · x₁|…|x_ℓ. Factors are proper simples (neither 1
/// nor Δ) and every adjacent pair is left-weighted, so the representation is
/// unique and equality is structural.
class NormalForm {
 public:
  NormalForm() = default;
  /// Identity element of ctx.
  explicit NormalForm(ContextPtr ctx);
  /// Wraps factors the caller already knows to be a normal chain (e.g. a
  /// rotation of a rigid element). No normalization is performed.
  static NormalForm adopt(ContextPtr ctx, int inf, std::vector<Simple> factors);

  const ContextPtr& context() const noexcept { return ctx_; }
  int inf() const noexcept { return inf_; }
  int sup() const noexcept { return inf_ + static_cast<int>(factors_.size()); }
  int canonical_length() const noexcept { return static_cast<int>(factors_.size()); }
  const std::vector<Simple>& factors() const noexcept { return factors_; }
  bool is_delta_power() const noexcept { return factors_.empty(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.ctx_ == b.ctx_ && a.inf_ == b.inf_ && a.factors_ == b.factors_;
  }
  /// Orders by (inf, factor ids); used for deterministic containers.
  friend bool operator<(const NormalForm& a, const NormalForm& b);

  std::size_t hash() const noexcept;

 private:
  friend class NormalFormBuilder;
  ContextPtr ctx_;
  int inf_ = 0;
  std::vector<Simple> factors_;
};

/// Incremental left-greedy normalizer: holds Δ^p · f₁…f_k in normal form and
/// absorbs letters on the right.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(ContextPtr ctx, int inf = 0);
  explicit NormalFormBuilder(const NormalForm& x);

  /// Right-multiplies by a simple (one backward pass of local slides).
  NormalFormBuilder& append(Simple s);
  /// Right-multiplies by s^{-1} = Δ^{-1}·τ^{-1}(∂s).
  NormalFormBuilder& append_inverse(Simple s);
  /// Right-multiplies by Δ^k.
  NormalFormBuilder& append_delta(int k);
  NormalFormBuilder& append(const NormalForm& y);

  NormalForm build() const;

 private:
  ContextPtr ctx_;
  int inf_ = 0;
  std::vector<Simple> factors_;
};

/// The normal form of Δ^p · letters₁ ⋯ letters_k.
NormalForm normalize(const ContextPtr& ctx, int p, const std::vector<Simple>& letters);
/// Δ^k.
NormalForm delta_power(const ContextPtr& ctx, int k);
/// The element represented by one simple.
NormalForm from_simple(const ContextPtr& ctx, Simple s);

/// Throws std::invalid_argument on context mismatch.
NormalForm multiply(const NormalForm& x, const NormalForm& y);
NormalForm inverse(const NormalForm& x);
/// xⁿ for any integer n; rigid x with n ≥ 1 takes the concatenation fast path.
NormalForm power(const NormalForm& x, int n);
/// c^{-1}·x·c.
NormalForm conjugate(const NormalForm& x, Simple c);
/// Δ^{-k}·x·Δ^{k}.
NormalForm tau_conj(const NormalForm& x, int k = 1);

/// True when every adjacent factor pair is left-weighted and no factor is 1 or Δ.
bool is_normal_chain(const Context& ctx, const std::vector<Simple>& factors);

/// "Δ^p f₁|f₂|…" or "Δ^p (ℓ=0)".
std::string to_string(const NormalForm& x);
/// Factors only, joined by '|' (empty string for Δ-powers).
std::string factors_string(const NormalForm& x);

}  // namespace garside

template <>
struct std::hash<garside::NormalForm> {
  std::size_t operator()(const garside::NormalForm& x) const noexcept { return x.hash(); }
};
