#include "garside/conjugacy_graph.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "garside/dynamics.h"

namespace garside {

namespace {

Simple arrow_bound(const NormalForm& y, ArrowColor color) {
  return color == ArrowColor::Black ? iota(y) : y.context()->complement(phi(y));
}

bool in_sc_shape(const NormalForm& z, const NormalForm& y) {
  return z.inf() == y.inf() && z.canonical_length() == y.canonical_length() && is_rigid(z);
}

}  // namespace

ConjugacyGraph conjugacy_graph(SCSet sc) { return conjugacy_graph(std::make_shared<const SCSet>(std::move(sc))); }

ConjugacyGraph conjugacy_graph(std::shared_ptr<const SCSet> sc) {
  ConjugacyGraph g;
  g.sc = std::move(sc);
  const SCSet& set = *g.sc;
  for (std::size_t v = 0; v < set.orbit_count(); ++v) {
    const NormalForm& y = set.representative(v);
    if (y.is_delta_power()) continue;
    for (ArrowColor color : {ArrowColor::Black, ArrowColor::Gray}) {
      std::map<std::size_t, std::vector<Simple>> by_target;
      for (auto& [c, z] : rigid_prefix_conjugates(y, arrow_bound(y, color))) {
        auto idx = set.index_of(z);
        if (!idx) throw std::logic_error("rigid conjugate " + to_string(z) + " missing from the SC set");
        by_target[set.orbit_of(*idx)].push_back(c);
      }
      for (auto& [target, cs] : by_target) {
        Arrow a;
        a.source = v;
        a.target = target;
        a.color = color;
        a.conjugators = std::move(cs);
        a.minimal = !a.is_loop();
        g.arrows.push_back(std::move(a));
      }
    }
  }
  std::sort(g.arrows.begin(), g.arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.source, a.target, a.color) < std::tie(b.source, b.target, b.color);
  });
  return g;
}

ConjugacyGraph minimal_arrows(const ConjugacyGraph& g) {
  ConjugacyGraph out;
  out.sc = g.sc;
  for (const Arrow& a : g.arrows) {
    if (a.is_loop()) continue;
    const NormalForm& y = g.representative(a.source);
    const Context& ctx = *y.context();
    // A chain c = c₁c₂⋯c_k collapses to c = (c₁⋯c_{k-1})·c_k, so a split into
    // two same-colour steps suffices.
    auto decomposable = [&](Simple c) {
      for (Simple c1 : ctx.strict_nontrivial_prefixes(c)) {
        NormalForm z = conjugate(y, c1);
        if (!in_sc_shape(z, y)) continue;
        if (ctx.is_prefix(ctx.left_quotient(c1, c), arrow_bound(z, a.color))) return true;
      }
      return false;
    };
    Arrow kept = a;
    kept.conjugators.clear();
    for (Simple c : a.conjugators)
      if (!decomposable(c)) kept.conjugators.push_back(c);
    if (!kept.conjugators.empty()) out.arrows.push_back(std::move(kept));
  }
  return out;
}

std::vector<int> vertex_levels(const ConjugacyGraph& g, int N) {
  if (N < 1) throw std::invalid_argument("power must be positive");
  std::vector<int> levels;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const NormalForm& y = g.representative(v);
    int level = N;
    for (int k = 1; k < N; ++k)
      if (N % k == 0 && root_of_rigid(y, N / k)) {
        level = k;
        break;
      }
    levels.push_back(level);
  }
  return levels;
}

std::string dot_export(const ConjugacyGraph& g) {
  std::ostringstream out;
  out << "digraph conjugacy {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << to_string(g.representative(v)) << "\"];\n";
  for (const Arrow& a : g.arrows) {
    if (a.is_loop()) continue;
    out << "  v" << a.source << " -> v" << a.target << " [color=" << (a.color == ArrowColor::Black ? "black" : "gray");
    if (a.multiplicity() >= 2) out << ", label=\"×" << a.multiplicity() << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

DominoResult domino_conjugate(const NormalForm& y, Simple c) {
  if (y.is_delta_power()) throw std::invalid_argument("domino_conjugate needs canonical length > 0");
  if (!is_rigid(y)) throw std::invalid_argument("domino_conjugate needs a rigid element");
  const Context& ctx = *y.context();
  const auto& x = y.factors();
  const std::size_t len = x.size();
  const int k = y.inf();
  if (!ctx.is_prefix(c, ctx.complement(x.back())))
    throw std::invalid_argument("conjugator is not a prefix of the complement of the final factor");
  if (c == ctx.identity()) return {y, true};

  std::vector<Simple> out(len);
  Simple d = *ctx.product(x.back(), c);
  for (std::size_t i = len - 1; i >= 1; --i) {
    auto [di, yi] = ctx.local_slide(x[i - 1], d);
    out[i] = yi;
    d = di;
  }
  auto [d0, y1] = ctx.local_slide(x.back(), ctx.tau(d, -k));
  out[0] = ctx.tau(y1, k);
  const bool closed = ctx.left_quotient(x.back(), d0) == c;
  return {normalize(y.context(), k, out), closed};
}

}  // namespace garside
