#pragma once

#include <memory>
#include <string>
#include <vector>

#include "garside/sliding_circuits.h"

namespace garside {

enum class ArrowColor { Black, Gray };

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  ArrowColor color = ArrowColor::Gray;
  /// The distinct conjugators realizing this arrow from the source representative.
  std::vector<Simple> conjugators;
  bool minimal = true;

  int multiplicity() const noexcept { return static_cast<int>(conjugators.size()); }
  bool is_loop() const noexcept { return source == target; }
};

/// Vertices are the orbits of an SCSet (same indices, same order). Arrows are
/// sorted by (source, target, color); loops are kept but never minimal.
struct ConjugacyGraph {
  std::shared_ptr<const SCSet> sc;
  std::vector<Arrow> arrows;

  std::size_t vertex_count() const noexcept { return sc ? sc->orbit_count() : 0; }
  const NormalForm& representative(std::size_t v) const { return sc->representative(v); }
};

ConjugacyGraph conjugacy_graph(std::shared_ptr<const SCSet> sc);
ConjugacyGraph conjugacy_graph(SCSet sc);

/// Drops arrows whose conjugators are all products of a chain of at least two
/// same-colour arrows; a surviving arrow keeps only its indecomposable conjugators.
ConjugacyGraph minimal_arrows(const ConjugacyGraph& g);

/// Level of each vertex of the graph of SC(x^N): the least k dividing N such
/// that the representative is the (N/k)-th power of a rigid element.
std::vector<int> vertex_levels(const ConjugacyGraph& g, int N);

/// DOT text; loops are omitted.
std::string dot_export(const ConjugacyGraph& g);

struct DominoResult {
  NormalForm conjugate;
  bool closure_ok = false;
};

/// Gray-arrow conjugation c⁻¹yc by one backward pass of local slides. Needs y
/// rigid with ℓ > 0 and c ≼ ∂φ(y) (std::invalid_argument otherwise).
/// closure_ok reports whether the pass closed up (c₀ = c); when it does and the
/// conjugate is rigid, the result equals conjugate(y, c).
DominoResult domino_conjugate(const NormalForm& y, Simple c);

}  // namespace garside
