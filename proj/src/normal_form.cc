#include "garside/normal_form.h"

#include <algorithm>
#include <stdexcept>

namespace garside {

namespace {

void require_same(const NormalForm& x, const NormalForm& y) {
  if (x.context() != y.context()) throw std::invalid_argument("normal forms belong to different contexts");
}

// Pulls every Δ to the front (twisting the factors it passes) and drops
// identities, then runs backward slide passes until nothing moves.
void settle(const Context& ctx, int& inf, std::vector<Simple>& f) {
  for (;;) {
    std::vector<Simple> kept;
    kept.reserve(f.size());
    for (Simple s : f) {
      if (s == ctx.identity()) continue;
      if (s == ctx.delta()) {
        for (Simple& k : kept) k = ctx.tau(k, 1);
        ++inf;
        continue;
      }
      kept.push_back(s);
    }
    f = std::move(kept);
    bool moved = false;
    for (std::size_t j = f.size(); j-- > 1;) {
      auto [a, b] = ctx.local_slide(f[j - 1], f[j]);
      if (a != f[j - 1]) {
        f[j - 1] = a;
        f[j] = b;
        moved = true;
      }
    }
    if (!moved) return;
  }
}

}  // namespace

NormalForm::NormalForm(ContextPtr ctx) : ctx_(std::move(ctx)) {}

NormalForm NormalForm::adopt(ContextPtr ctx, int inf, std::vector<Simple> factors) {
  NormalForm x(std::move(ctx));
  x.inf_ = inf;
  x.factors_ = std::move(factors);
  return x;
}

bool operator<(const NormalForm& a, const NormalForm& b) {
  if (a.inf_ != b.inf_) return a.inf_ < b.inf_;
  return a.factors_ < b.factors_;
}

std::size_t NormalForm::hash() const noexcept {
  std::size_t h = std::hash<int>{}(inf_) * 0x9E3779B97F4A7C15ull;
  for (Simple s : factors_) h = (h ^ s.id) * 0x100000001B3ull + (h >> 29);
  return h;
}

NormalFormBuilder::NormalFormBuilder(ContextPtr ctx, int inf) : ctx_(std::move(ctx)), inf_(inf) {}

NormalFormBuilder::NormalFormBuilder(const NormalForm& x)
    : ctx_(x.context()), inf_(x.inf()), factors_(x.factors()) {}

NormalFormBuilder& NormalFormBuilder::append(Simple s) {
  const Context& ctx = *ctx_;
  if (!ctx.contains(s)) throw std::out_of_range("simple does not belong to context " + ctx.name());
  if (s == ctx.identity()) return *this;
  factors_.push_back(s);
  // Right domino rule: a single backward pass restores left-weightedness, and
  // the pass may stop at the first pair that does not move.
  for (std::size_t j = factors_.size(); j-- > 1;) {
    auto [a, b] = ctx.local_slide(factors_[j - 1], factors_[j]);
    if (a == factors_[j - 1]) break;
    factors_[j - 1] = a;
    factors_[j] = b;
  }
  std::size_t lead = 0;
  while (lead < factors_.size() && factors_[lead] == ctx.delta()) ++lead;
  if (lead) {
    inf_ += static_cast<int>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
  }
  while (!factors_.empty() && factors_.back() == ctx.identity()) factors_.pop_back();
  const bool clean = std::none_of(factors_.begin(), factors_.end(), [&](Simple x) {
    return x == ctx.identity() || x == ctx.delta();
  });
  if (!clean) settle(ctx, inf_, factors_);
  return *this;
}

NormalFormBuilder& NormalFormBuilder::append_delta(int k) {
  for (Simple& s : factors_) s = ctx_->tau(s, k);
  inf_ += k;
  return *this;
}

NormalFormBuilder& NormalFormBuilder::append_inverse(Simple s) {
  append_delta(-1);
  return append(ctx_->tau(ctx_->complement(s), -1));
}

NormalFormBuilder& NormalFormBuilder::append(const NormalForm& y) {
  if (y.context() != ctx_) throw std::invalid_argument("normal forms belong to different contexts");
  append_delta(y.inf());
  for (Simple s : y.factors()) append(s);
  return *this;
}

NormalForm NormalFormBuilder::build() const {
  NormalForm x(ctx_);
  x.inf_ = inf_;
  x.factors_ = factors_;
  return x;
}

NormalForm normalize(const ContextPtr& ctx, int p, const std::vector<Simple>& letters) {
  NormalFormBuilder b(ctx, p);
  for (Simple s : letters) b.append(s);
  return b.build();
}

NormalForm delta_power(const ContextPtr& ctx, int k) { return NormalFormBuilder(ctx, k).build(); }

NormalForm from_simple(const ContextPtr& ctx, Simple s) { return normalize(ctx, 0, {s}); }

NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  require_same(x, y);
  return NormalFormBuilder(x).append(y).build();
}

NormalForm inverse(const NormalForm& x) {
  const Context& ctx = *x.context();
  const int p = x.inf();
  const auto& f = x.factors();
  const int len = static_cast<int>(f.size());
  int inf = -(p + len);
  std::vector<Simple> g;
  g.reserve(f.size());
  for (int k = len; k >= 1; --k)
    g.push_back(ctx.tau(ctx.complement(f[static_cast<std::size_t>(k - 1)]), -(k + p)));
  settle(ctx, inf, g);
  return normalize(x.context(), inf, g);
}

NormalForm power(const NormalForm& x, int n) {
  if (n == 0) return NormalForm(x.context());
  if (n < 0) return power(inverse(x), -n);
  const Context& ctx = *x.context();
  const int p = x.inf();
  const auto& f = x.factors();
  const bool rigid = f.empty() || ctx.is_left_weighted(f.back(), ctx.tau(f.front(), -p));
  if (rigid) {
    std::vector<Simple> g;
    g.reserve(f.size() * static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k)
      for (Simple s : f) g.push_back(ctx.tau(s, p * k));
    return NormalForm::adopt(x.context(), n * p, std::move(g));
  }
  NormalFormBuilder b(x);
  for (int k = 1; k < n; ++k) b.append(x);
  return b.build();
}

NormalForm conjugate(const NormalForm& x, Simple c) {
  NormalFormBuilder b(x.context());
  b.append_inverse(c);
  b.append(x);
  b.append(c);
  return b.build();
}

NormalForm tau_conj(const NormalForm& x, int k) {
  const Context& ctx = *x.context();
  std::vector<Simple> f;
  f.reserve(x.factors().size());
  for (Simple s : x.factors()) f.push_back(ctx.tau(s, k));
  return NormalForm::adopt(x.context(), x.inf(), std::move(f));
}

bool is_normal_chain(const Context& ctx, const std::vector<Simple>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == ctx.identity() || factors[i] == ctx.delta()) return false;
    if (i + 1 < factors.size() && !ctx.is_left_weighted(factors[i], factors[i + 1])) return false;
  }
  return true;
}

std::string factors_string(const NormalForm& x) {
  std::string out;
  for (std::size_t i = 0; i < x.factors().size(); ++i) {
    if (i) out += '|';
    out += x.context()->render(x.factors()[i]);
  }
  return out;
}

std::string to_string(const NormalForm& x) {
  std::string out = "Δ^" + std::to_string(x.inf()) + " ";
  if (x.is_delta_power()) return out + "(ℓ=0)";
  return out + factors_string(x);
}

}  // namespace garside
