#include "garside/classical.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace garside {

namespace {

using Images = std::array<int, perm::kMaxPoints>;

Images unpack(PackedPerm p, int n) {
  Images a{};
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = perm::at(p, i);
  return a;
}

std::uint32_t lex_rank(PackedPerm p, int n) {
  std::uint32_t rank = 0;
  for (int i = 0; i < n; ++i) {
    const int v = perm::at(p, i);
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm::at(p, j) < v) ++smaller;
    rank = rank * static_cast<std::uint32_t>(n - i) + static_cast<std::uint32_t>(smaller);
  }
  return rank;
}

int inversion_count(PackedPerm p, int n) {
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm::at(p, i) > perm::at(p, j)) ++count;
  return count;
}

}  // namespace

ClassicalContext::ClassicalContext(int strands) : Context(Kind::Classical, strands) {
  const int n = strands;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<PackedPerm> perms;
  std::vector<int> weights;
  do {
    const PackedPerm p = perm::from_images(v);
    perms.push_back(p);
    weights.push_back(inversion_count(p, n));
  } while (std::next_permutation(v.begin(), v.end()));

  std::vector<Simple> atoms;
  for (int i = 0; i + 1 < n; ++i) {
    PackedPerm p = perm::identity(n);
    p = perm::set(perm::set(p, i, i + 1), i + 1, i);
    atoms.push_back(Simple{lex_rank(p, n)});
  }
  const Simple delta{static_cast<std::uint32_t>(perms.size() - 1)};
  install(std::move(perms), std::move(weights), delta, std::move(atoms));
}

std::optional<Simple> ClassicalContext::lookup(PackedPerm p) const {
  return Simple{lex_rank(p, strands())};
}

Simple ClassicalContext::generator(int i) const {
  if (i < 1 || i >= strands())
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(strands() - 1));
  return atoms()[static_cast<std::size_t>(i - 1)];
}

bool ClassicalContext::is_prefix(Simple a, Simple b) const {
  const int n = strands();
  const PackedPerm pa = permutation(a);
  const PackedPerm pb = permutation(b);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm::at(pa, i) > perm::at(pa, j) && perm::at(pb, i) < perm::at(pb, j)) return false;
  return true;
}

// Grows the meet one crossing at a time. With c the current common prefix, the
// atom σ_i extends c inside both a and b exactly when the strands sitting at
// positions i, i+1 after c are uncrossed in c and crossed in both a and b. The
// weak order is a lattice, so the greedy walk stops at a ∧ b.
Simple ClassicalContext::meet(Simple a, Simple b) const {
  const int n = strands();
  const Images pa = unpack(permutation(a), n);
  const Images pb = unpack(permutation(b), n);
  Images c{};
  Images c_inv{};
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = c_inv[static_cast<std::size_t>(i)] = i;

  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i + 1 < n; ++i) {
      const int k1 = c_inv[static_cast<std::size_t>(i)];
      const int k2 = c_inv[static_cast<std::size_t>(i + 1)];
      if (k1 > k2) continue;
      const auto u1 = static_cast<std::size_t>(k1);
      const auto u2 = static_cast<std::size_t>(k2);
      if (pa[u1] > pa[u2] && pb[u1] > pb[u2]) {
        std::swap(c[u1], c[u2]);
        c_inv[static_cast<std::size_t>(i)] = k2;
        c_inv[static_cast<std::size_t>(i + 1)] = k1;
        grew = true;
      }
    }
  }
  PackedPerm p = 0;
  for (int i = 0; i < n; ++i) p = perm::set(p, i, c[static_cast<std::size_t>(i)]);
  return Simple{lex_rank(p, n)};
}

std::vector<int> ClassicalContext::word(Simple s) const {
  std::vector<int> out;
  Simple rest = s;
  while (rest != identity()) {
    for (int i = 1; i < strands(); ++i) {
      const Simple g = generator(i);
      if (is_prefix(g, rest)) {
        out.push_back(i);
        rest = left_quotient(g, rest);
        break;
      }
    }
  }
  return out;
}

std::string ClassicalContext::render(Simple s) const {
  if (s == identity()) return "1";
  if (s == delta()) return "D";
  std::string out;
  for (int i : word(s)) out += static_cast<char>('0' + i);
  return out;
}

std::shared_ptr<const ClassicalContext> classical_context(int m, int max_strands) {
  if (m < 2 || m > max_strands)
    throw std::out_of_range("classical braid group needs 2 <= m <= " + std::to_string(max_strands) +
                            ", got " + std::to_string(m));
  return std::make_shared<const ClassicalContext>(m);
}

}  // namespace garside
