#include "garside/context.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace garside {

namespace perm {

PackedPerm identity(int n) noexcept {
  PackedPerm p = 0;
  for (int i = 0; i < n; ++i) p = set(p, i, i);
  return p;
}

PackedPerm then(PackedPerm a, PackedPerm b, int n) noexcept {
  PackedPerm r = 0;
  for (int i = 0; i < n; ++i) r = set(r, i, at(b, at(a, i)));
  return r;
}

PackedPerm inverse(PackedPerm a, int n) noexcept {
  PackedPerm r = 0;
  for (int i = 0; i < n; ++i) r = set(r, at(a, i), i);
  return r;
}

PackedPerm from_images(const std::vector<int>& images) {
  if (images.size() > static_cast<std::size_t>(kMaxPoints))
    throw std::invalid_argument("permutation too large to pack");
  PackedPerm p = 0;
  for (std::size_t i = 0; i < images.size(); ++i) p = set(p, static_cast<int>(i), images[i]);
  return p;
}

std::vector<int> images(PackedPerm p, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = at(p, i);
  return v;
}

}  // namespace perm

Context::Context(Kind kind, int strands) : kind_(kind), strands_(strands) {}

std::string Context::name() const {
  return (kind_ == Kind::Classical ? "A:" : "dual:") + std::to_string(strands_);
}

void Context::install(std::vector<PackedPerm> perms, std::vector<int> weights, Simple delta,
                      std::vector<Simple> atoms) {
  perms_ = std::move(perms);
  weights_ = std::move(weights);
  atoms_ = std::move(atoms);
  delta_ = delta;
  identity_ = Simple{0};
  const int n = strands_;
  const PackedPerm d = perms_[delta_.id];
  const PackedPerm d_inv = perm::inverse(d, n);

  complement_.resize(perms_.size());
  std::vector<Simple> tau1(perms_.size());
  for (std::uint32_t i = 0; i < perms_.size(); ++i) {
    const PackedPerm p = perms_[i];
    // ∂s = s^{-1}·Δ
    auto c = lookup(perm::then(perm::inverse(p, n), d, n));
    // τ(s) = Δ^{-1}·s·Δ
    auto t = lookup(perm::then(perm::then(d_inv, p, n), d, n));
    if (!c || !t) throw std::logic_error("Garside structure is not closed under ∂ or τ");
    complement_[i] = *c;
    tau1[i] = *t;
  }

  tau_pow_.clear();
  std::vector<Simple> current(perms_.size());
  for (std::uint32_t i = 0; i < perms_.size(); ++i) current[i] = Simple{i};
  tau_pow_.push_back(current);
  for (;;) {
    for (auto& s : current) s = tau1[s.id];
    bool is_identity = true;
    for (std::uint32_t i = 0; i < current.size(); ++i)
      if (current[i].id != i) {
        is_identity = false;
        break;
      }
    if (is_identity) break;
    tau_pow_.push_back(current);
  }
  central_power_ = static_cast<int>(tau_pow_.size());
}

void Context::check(Simple s) const {
  if (!contains(s)) throw std::out_of_range("simple does not belong to context " + name());
}

int Context::weight(Simple s) const {
  check(s);
  return weights_[s.id];
}

Simple Context::complement(Simple s) const {
  check(s);
  return complement_[s.id];
}

Simple Context::tau(Simple s, int k) const {
  check(s);
  const int e = central_power_;
  const int r = ((k % e) + e) % e;
  return tau_pow_[static_cast<std::size_t>(r)][s.id];
}

std::optional<Simple> Context::product(Simple a, Simple b) const {
  check(a);
  check(b);
  auto r = lookup(perm::then(perms_[a.id], perms_[b.id], strands_));
  if (!r || weights_[r->id] != weights_[a.id] + weights_[b.id]) return std::nullopt;
  return r;
}

Simple Context::left_quotient(Simple a, Simple b) const {
  check(a);
  check(b);
  auto r = lookup(perm::then(perm::inverse(perms_[a.id], strands_), perms_[b.id], strands_));
  if (!r || weights_[r->id] + weights_[a.id] != weights_[b.id])
    throw std::invalid_argument("left_quotient: first argument is not a prefix of the second");
  return *r;
}

bool Context::is_left_weighted(Simple a, Simple b) const {
  return meet(b, complement(a)) == identity_;
}

std::pair<Simple, Simple> Context::local_slide(Simple a, Simple b) const {
  const Simple t = meet(b, complement(a));
  if (t == identity_) return {a, b};
  return {*product(a, t), left_quotient(t, b)};
}

std::vector<Simple> Context::prefixes(Simple s) const {
  check(s);
  std::vector<Simple> out{identity_};
  std::unordered_set<std::uint32_t> seen{identity_.id};
  std::vector<Simple> layer{identity_};
  while (!layer.empty()) {
    std::vector<Simple> next;
    for (Simple c : layer) {
      for (Simple a : atoms_) {
        auto ca = product(c, a);
        if (!ca || !is_prefix(*ca, s)) continue;
        if (seen.insert(ca->id).second) {
          next.push_back(*ca);
          out.push_back(*ca);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simple> Context::strict_nontrivial_prefixes(Simple s) const {
  auto all = prefixes(s);
  std::erase_if(all, [&](Simple c) { return c == identity_ || c == s; });
  return all;
}

std::vector<Simple> Context::simples() const {
  std::vector<Simple> out(perms_.size());
  for (std::uint32_t i = 0; i < perms_.size(); ++i) out[i] = Simple{i};
  return out;
}

PackedPerm Context::permutation(Simple s) const {
  check(s);
  return perms_[s.id];
}

}  // namespace garside
