#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <deque>
#include <doctest.h>

#include "garside/dynamics.h"
#include "garside/sliding_circuits.h"
#include "properties.h"

using namespace garside;

TEST_CASE("initial and final factors") {
  auto b4 = classical_context(4);
  const NormalForm x = parse_braid(b4, "21|12|2132");
  CHECK(b4->render(iota(x)) == "21");
  CHECK(b4->render(phi(x)) == "2132");
  const NormalForm dx = multiply(delta_power(b4, 1), x);
  CHECK(dx.factors() == x.factors());
  CHECK(dx.inf() == 1);
  CHECK(iota(dx) == b4->tau(x.factors()[0], -1));
  CHECK_THROWS_AS(iota(delta_power(b4, 2)), std::domain_error);
  CHECK_THROWS_AS(phi(NormalForm(b4)), std::domain_error);

  auto d4 = dual_context(4);
  const NormalForm y = parse_braid(d4, "D A A");
  CHECK(iota(y) == d4->letter('M'));
  CHECK(d4->tau(d4->letter('A'), -1) == d4->letter('M'));
}

TEST_CASE("rigidity") {
  auto b4 = classical_context(4);
  const NormalForm x = parse_braid(b4, "21|12|2132");
  CHECK(is_rigid(x));
  CHECK(is_rigid(delta_power(b4, 3)));
  CHECK(is_rigid(NormalForm(b4)));
  const NormalForm y = parse_braid(b4, "-1 21|12|2132 1");
  CHECK_FALSE(is_rigid(y));
  CHECK(is_rigid(power(y, 2)));
  CHECK(power(y, 2).inf() == 0);
  CHECK(power(y, 2).canonical_length() == 6);
}

TEST_CASE("cycling and orbits") {
  auto b4 = classical_context(4);
  const NormalForm x = parse_braid(b4, "21|12|2132");
  CHECK(cycling(x) == conjugate(x, iota(x)));
  CHECK(factors_string(cycling(x)) == "12|2132|21");
  const auto o = orbit(x);
  CHECK(o.size() <= 6);
  CHECK(orbit(delta_power(b4, 2)).size() == 1);
  CHECK_THROWS_AS(cycling(delta_power(b4, 1)), std::domain_error);

  auto d4 = dual_context(4);
  const NormalForm y = parse_braid(d4, "D A A");
  std::set<std::string> names;
  for (const NormalForm& z : orbit(y)) names.insert(to_string(z));
  CHECK(names == std::set<std::string>{"Δ^1 A|A", "Δ^1 A|M", "Δ^1 M|M", "Δ^1 M|A"});

  // non-rigid cycling agrees with conjugation too
  const NormalForm z = parse_braid(b4, "-1 21|12|2132 1");
  CHECK(cycling(z) == conjugate(z, iota(z)));
}

TEST_CASE("cyclic sliding") {
  auto b4 = classical_context(4);
  const NormalForm x = parse_braid(b4, "21|12|2132");
  CHECK(preferred_prefix(x) == b4->identity());
  CHECK(cyclic_slide(x) == x);
  const SlideResult r = slide_to_circuit(x);
  CHECK(r.element == x);
  CHECK(r.transient == 0);
  CHECK(r.cycle_length == 1);
  CHECK_THROWS_AS(preferred_prefix(delta_power(b4, 1)), std::domain_error);
  CHECK(slide_to_circuit(delta_power(b4, 1)).element == delta_power(b4, 1));

  const NormalForm y = parse_braid(b4, "-1 21|12|2132 1");
  const SlideResult ry = slide_to_circuit(y);
  CHECK(is_rigid(ry.element));
  CHECK(enumerate_sc(x).contains(ry.element));

  auto b8 = classical_context(8);
  const NormalForm x8 = parse_braid(b8, "246|24654321765432");
  const NormalForm y8 = parse_braid(b8, "-16 246|24654321765432 16");
  CHECK(y8.inf() == -1);
  CHECK(y8.sup() == 3);
  const NormalForm c8 = slide_to_circuit(y8).element;
  CHECK(is_rigid(c8));
  CHECK(c8.inf() == 0);
  CHECK(c8.sup() == 2);
  CHECK(enumerate_sc(x8).contains(c8));
}

TEST_CASE("fixed points of sliding with trivial preferred prefix are the rigid elements") {
  auto b4 = classical_context(4);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const NormalForm a = oracle::evaluate(b4, oracle::random_word(*b4, rng, 14));
    if (a.is_delta_power()) continue;
    CHECK((preferred_prefix(a) == b4->identity()) == is_rigid(a));
  }
}

TEST_CASE("random conjugates of golden elements slide into SC") {
  std::mt19937_64 rng(31);
  for (const auto& g : props::golden_elements()) {
    if (g.group == "A:8") continue;
    const NormalForm x = props::golden_x(g);
    const SCSet sc = enumerate_sc(x);
    const ContextPtr& ctx = x.context();
    for (int i = 0; i < 20; ++i) {
      const NormalForm w = oracle::evaluate(ctx, oracle::random_word(*ctx, rng, 6));
      const NormalForm y = multiply(inverse(w), multiply(x, w));
      const NormalForm c = slide_to_circuit(y).element;
      CHECK(is_rigid(c));
      CHECK(sc.contains(c));
    }
  }
}

TEST_CASE("sliding budget") {
  auto b4 = classical_context(4);
  const NormalForm y = parse_braid(b4, "-1 21|12|2132 1");
  Budget tiny;
  tiny.max_slides = 1;
  CHECK_THROWS_AS(slide_to_circuit(y, tiny), BudgetExceeded);
  CHECK(Budget::parse("7").max_slides == 7);
  CHECK(Budget::parse("slides=5,elements=9").max_elements == 9);
  CHECK(Budget::parse("elements=9").max_slides == Budget{}.max_slides);
  CHECK_THROWS_AS(Budget::parse("slides=x"), std::invalid_argument);
  CHECK_THROWS_AS(Budget::parse("frogs=2"), std::invalid_argument);
}

TEST_CASE("rigid exponent") {
  auto b4 = classical_context(4);
  CHECK(rigid_exponent(parse_braid(b4, "21|12|2132")) == 1);
  CHECK(rigid_exponent(parse_braid(b4, "-1 21|12|2132 1")) == 2);
  auto b5 = classical_context(5);
  const NormalForm y5 = parse_braid(b5, "D^-2 121321432|213214321|121321|232143");
  CHECK(rigid_exponent(y5) == 2);
  for (int n = 1; n <= 12; ++n) CHECK(is_rigid(power(y5, n)) == (n % 2 == 0));
  CHECK_THROWS_AS(rigid_exponent(y5, 0), std::invalid_argument);

  const props::Verdict v = props::rigid_power_divisibility(10, 5);
  CHECK_MESSAGE(v.ok, v.detail);
}

namespace {

// Greedy simple conjugations that raise inf or lower sup reach the summit set.
NormalForm to_summit(NormalForm y) {
  for (bool moved = true; moved;) {
    moved = false;
    for (Simple s : y.context()->simples()) {
      const NormalForm z = conjugate(y, s);
      if (z.inf() > y.inf() || z.sup() < y.sup()) {
        y = z, moved = true;
        break;
      }
    }
  }
  return y;
}

// Non-rigid summit elements of random braids with rigid conjugates.
std::vector<NormalForm> non_rigid_summit_conjugates(int wanted) {
  std::vector<NormalForm> out;
  std::mt19937_64 rng(77);
  for (const char* group : {"A:4", "A:5", "dual:4"}) {
    const ContextPtr ctx = make_context(group);
    int found = 0;
    for (int i = 0; i < 3000 && found < wanted; ++i) {
      const NormalForm y = to_summit(oracle::evaluate(ctx, oracle::random_word(*ctx, rng, 10)));
      if (y.canonical_length() < 2 || is_rigid(y)) continue;
      const NormalForm x = slide_to_circuit(y).element;
      if (is_rigid(x) && x.inf() == y.inf() && x.sup() == y.sup()) out.push_back(y), ++found;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("non-rigid summit elements have no rigid powers") {
  const auto ys = non_rigid_summit_conjugates(5);
  CHECK(ys.size() >= 15);
  for (const NormalForm& y : ys)
    for (int n = 1; n <= 12; ++n) CHECK_FALSE(is_rigid(power(y, n)));

  // Leaving the summit set is different: σ₁⁻¹xσ₁ has inf -1 yet a rigid square.
  auto b4 = classical_context(4);
  const NormalForm y = parse_braid(b4, "-1 21|12|2132 1");
  CHECK(y.inf() == -1);
  CHECK(is_rigid(power(y, 2)));
}

TEST_CASE("initial factors grow along powers of non-rigid summit elements") {
  for (const NormalForm& y : non_rigid_summit_conjugates(5)) {
    const Context& ctx = *y.context();
    for (int n = 1; n < 8; ++n) {
      const NormalForm a = power(y, n), b = power(y, n + 1);
      if (a.canonical_length() == n * y.canonical_length() && !b.is_delta_power())
        CHECK(ctx.is_prefix(iota(a), iota(b)));
    }
  }
}

TEST_CASE("roots of rigid elements") {
  auto b4 = classical_context(4);
  const NormalForm x = parse_braid(b4, "21|12|2132");
  CHECK(root_of_rigid(x, 1) == x);
  CHECK(root_of_rigid(power(x, 2), 2) == x);
  CHECK(root_of_rigid(power(x, 6), 3) == power(x, 2));
  CHECK_FALSE(root_of_rigid(parse_braid(b4, "21|12|2132|2132|23|32"), 2).has_value());
  CHECK_FALSE(root_of_rigid(x, 2).has_value());
  CHECK(root_of_rigid(delta_power(b4, 4), 2) == delta_power(b4, 2));
  CHECK_FALSE(root_of_rigid(delta_power(b4, 3), 2).has_value());

  auto d4 = dual_context(4);
  const NormalForm y = parse_braid(d4, "D A A");
  CHECK(root_of_rigid(power(y, 3), 3) == y);
  CHECK_FALSE(root_of_rigid(power(y, 3), 2).has_value());
}
