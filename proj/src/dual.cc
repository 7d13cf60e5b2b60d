#include "garside/dual.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace garside {

namespace {

using Blocks = DualContext::Blocks;

void set_partitions(int n, int i, std::vector<int>& label, int used, std::vector<std::vector<int>>& out) {
  if (i == n) {
    out.push_back(label);
    return;
  }
  for (int b = 0; b <= used; ++b) {
    label[static_cast<std::size_t>(i)] = b;
    set_partitions(n, i + 1, label, std::max(used, b + 1), out);
  }
}

Blocks blocks_of_labels(const std::vector<int>& label) {
  std::map<int, std::vector<int>> by;
  for (std::size_t i = 0; i < label.size(); ++i) by[label[i]].push_back(static_cast<int>(i) + 1);
  Blocks out;
  for (auto& [k, b] : by) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

PackedPerm perm_of_blocks(const Blocks& blocks, int n) {
  PackedPerm p = perm::identity(n);
  for (const auto& b : blocks)
    for (std::size_t k = 0; k < b.size(); ++k) p = perm::set(p, b[k] - 1, b[(k + 1) % b.size()] - 1);
  return p;
}

Blocks normalized(Blocks blocks, int n) {
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n) throw std::invalid_argument("puncture " + std::to_string(v) + " out of range");
      if (seen[static_cast<std::size_t>(v)]++) throw std::invalid_argument("puncture repeated in blocks");
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[static_cast<std::size_t>(v)]) blocks.push_back({v});
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

bool is_non_crossing(const Blocks& blocks) {
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      for (int a : blocks[x])
        for (int c : blocks[x])
          for (int b : blocks[y])
            for (int d : blocks[y])
              if (a < b && b < c && c < d) return false;
    }
  return true;
}

DualContext::DualContext(int strands) : Context(Kind::Dual, strands) {
  const int n = strands;
  std::vector<std::vector<int>> labels;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  set_partitions(n, 0, label, 0, labels);

  std::vector<Blocks> all;
  for (const auto& l : labels) {
    Blocks b = blocks_of_labels(l);
    if (is_non_crossing(b)) all.push_back(std::move(b));
  }
  auto weight_of = [n](const Blocks& b) { return n - static_cast<int>(b.size()); };
  auto nontrivial = [](const Blocks& b) {
    Blocks out;
    for (const auto& blk : b)
      if (blk.size() > 1) out.push_back(blk);
    return out;
  };
  std::sort(all.begin(), all.end(), [&](const Blocks& x, const Blocks& y) {
    if (weight_of(x) != weight_of(y)) return weight_of(x) < weight_of(y);
    return nontrivial(x) < nontrivial(y);
  });

  blocks_ = all;
  std::vector<PackedPerm> perms;
  std::vector<int> weights;
  std::vector<Simple> atoms;
  for (std::uint32_t i = 0; i < all.size(); ++i) {
    perms.push_back(perm_of_blocks(all[i], n));
    weights.push_back(weight_of(all[i]));
    if (weights.back() == 1) atoms.push_back(Simple{i});
    index_.emplace_back(perms.back(), i);
  }
  std::sort(index_.begin(), index_.end());

  const std::size_t count = all.size();
  meet_table_.assign(count * count, 0);
  std::map<Blocks, std::uint32_t> by_blocks;
  for (std::uint32_t i = 0; i < count; ++i) by_blocks[all[i]] = i;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      // Common refinement: label each puncture by its pair of block indices.
      std::vector<int> la(static_cast<std::size_t>(n)), lb(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < all[a].size(); ++k)
        for (int v : all[a][k]) la[static_cast<std::size_t>(v - 1)] = static_cast<int>(k);
      for (std::size_t k = 0; k < all[b].size(); ++k)
        for (int v : all[b][k]) lb[static_cast<std::size_t>(v - 1)] = static_cast<int>(k);
      std::vector<int> joint(static_cast<std::size_t>(n));
      for (std::size_t v = 0; v < joint.size(); ++v) joint[v] = la[v] * n + lb[v];
      meet_table_[a * count + b] = static_cast<std::uint16_t>(by_blocks.at(blocks_of_labels(joint)));
    }

  const Simple delta{static_cast<std::uint32_t>(count - 1)};
  install(std::move(perms), std::move(weights), delta, std::move(atoms));
}

std::optional<Simple> DualContext::lookup(PackedPerm p) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(p, std::uint32_t{0}));
  if (it == index_.end() || it->first != p) return std::nullopt;
  return Simple{it->second};
}

Blocks DualContext::blocks(Simple s) const {
  check(s);
  return blocks_[s.id];
}

Simple DualContext::from_blocks(const Blocks& blocks) const {
  Blocks b = normalized(blocks, strands());
  if (!is_non_crossing(b)) throw std::invalid_argument("blocks cross");
  auto s = lookup(perm_of_blocks(b, strands()));
  if (!s) throw std::logic_error("non-crossing partition missing from context");
  return *s;
}

Simple DualContext::band(int i, int j) const {
  if (i == j) throw std::invalid_argument("band generator needs two distinct punctures");
  return from_blocks({{i, j}});
}

Simple DualContext::letter(char c) const {
  if (c == 'D') return delta();
  if (strands() != 4) throw std::invalid_argument(std::string("letter '") + c + "' is only defined for dual:4");
  switch (c) {
    case 'S': return band(1, 2);
    case 'E': return band(2, 3);
    case 'N': return band(3, 4);
    case 'W': return band(1, 4);
    case 'A': return band(1, 3);
    case 'M': return band(2, 4);
    default: throw std::invalid_argument(std::string("unknown dual letter '") + c + "'");
  }
}

Simple DualContext::meet(Simple a, Simple b) const {
  check(a);
  check(b);
  return Simple{meet_table_[a.id * simple_count() + b.id]};
}

bool DualContext::is_prefix(Simple a, Simple b) const { return meet(a, b) == a; }

std::string DualContext::render(Simple s) const {
  if (s == identity()) return "1";
  if (s == delta()) return "D";
  const Blocks& b = blocks_[s.id];
  std::vector<const std::vector<int>*> big;
  for (const auto& blk : b)
    if (blk.size() > 1) big.push_back(&blk);
  if (big.size() == 1 && big[0]->size() == 2) {
    const int i = (*big[0])[0];
    const int j = (*big[0])[1];
    if (strands() == 4) {
      static const std::map<std::pair<int, int>, char> names{
          {{1, 2}, 'S'}, {{2, 3}, 'E'}, {{3, 4}, 'N'}, {{1, 4}, 'W'}, {{1, 3}, 'A'}, {{2, 4}, 'M'}};
      return std::string(1, names.at({i, j}));
    }
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  std::string out;
  for (const auto* blk : big) {
    out += "{";
    for (std::size_t k = 0; k < blk->size(); ++k) {
      if (k) out += ",";
      out += std::to_string((*blk)[k]);
    }
    out += "}";
  }
  return out;
}

std::shared_ptr<const DualContext> dual_context(int m, int max_strands) {
  if (m < 2 || m > max_strands)
    throw std::out_of_range("dual braid group needs 2 <= m <= " + std::to_string(max_strands) + ", got " +
                            std::to_string(m));
  return std::make_shared<const DualContext>(m);
}

}  // namespace garside
