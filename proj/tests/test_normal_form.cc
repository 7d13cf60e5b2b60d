#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "garside/dynamics.h"
#include "properties.h"

using namespace garside;

TEST_CASE("golden normal forms") {
  auto b4 = classical_context(4);
  const NormalForm x = from_artin_word(b4, {2, 1, 1, 2, 2, 1, 3, 2});
  CHECK(to_string(x) == "Δ^0 21|12|2132");
  CHECK(x.inf() == 0);
  CHECK(x.sup() == 3);

  auto b8 = classical_context(8);
  const NormalForm y = from_artin_word(b8, {2, 4, 6, 2, 4, 6, 5, 4, 3, 2, 1, 7, 6, 5, 4, 3, 2});
  CHECK(factors_string(y) == "246|24654321765432");
  CHECK(y.inf() == 0);
  CHECK(y.sup() == 2);

  CHECK(from_artin_word(b4, {}) == NormalForm(b4));
  CHECK_THROWS_AS(from_artin_word(b4, {4}), std::out_of_range);
  CHECK_THROWS_AS(from_artin_word(b4, {0}), std::out_of_range);
}

TEST_CASE("Δ powers and rendering") {
  auto b3 = classical_context(3);
  CHECK(to_string(parse_braid(b3, "1 2 1")) == "Δ^1 (ℓ=0)");
  CHECK(parse_braid(b3, "D^3").inf() == 3);
  CHECK(parse_braid(b3, "D -D").is_delta_power());
  CHECK(parse_braid(b3, "-D").inf() == -1);
  const NormalForm x = parse_braid(b3, "-1");
  CHECK(to_string(x) == "Δ^-1 12");
  CHECK(x.sup() == 0);
}

TEST_CASE("arithmetic identities") {
  std::mt19937_64 rng(11);
  for (const ContextPtr& ctx : {ContextPtr(classical_context(4)), ContextPtr(dual_context(4)), ContextPtr(classical_context(5))}) {
    for (int i = 0; i < 150; ++i) {
      const NormalForm a = oracle::evaluate(ctx, oracle::random_word(*ctx, rng, 12));
      const NormalForm b = oracle::evaluate(ctx, oracle::random_word(*ctx, rng, 12));
      const NormalForm c = oracle::evaluate(ctx, oracle::random_word(*ctx, rng, 12));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      const NormalForm ai = inverse(a);
      CHECK(multiply(a, ai) == NormalForm(ctx));
      CHECK(ai.inf() == -a.sup());
      CHECK(ai.canonical_length() == a.canonical_length());
      CHECK(inverse(ai) == a);
      NormalForm cube = multiply(a, multiply(a, a));
      CHECK(power(a, 3) == cube);
      CHECK(power(a, -2) == inverse(multiply(a, a)));
      CHECK(power(a, 0) == NormalForm(ctx));
      CHECK(normalize(ctx, a.inf(), a.factors()) == a);
      CHECK(tau_conj(a, 1) == multiply(delta_power(ctx, -1), multiply(a, delta_power(ctx, 1))));
      const Simple s = ctx->atoms()[static_cast<std::size_t>(i) % ctx->atoms().size()];
      CHECK(conjugate(a, s) == multiply(inverse(from_simple(ctx, s)), multiply(a, from_simple(ctx, s))));
    }
  }
}

TEST_CASE("rigid fast path in power matches repeated multiplication") {
  auto b4 = classical_context(4);
  const NormalForm x = parse_braid(b4, "21|12|2132");
  NormalForm p = x;
  for (int n = 2; n <= 6; ++n) {
    p = multiply(p, x);
    CHECK(power(x, n) == p);
  }
  auto d4 = dual_context(4);
  const NormalForm y = parse_braid(d4, "D A A");
  CHECK(to_string(power(y, 2)) == "Δ^2 M|M|A|A");
  CHECK(power(y, 3) == multiply(y, multiply(y, y)));
}

TEST_CASE("context mismatch is rejected") {
  CHECK_THROWS_AS(multiply(NormalForm(classical_context(3)), NormalForm(classical_context(4))), std::invalid_argument);
}

TEST_CASE("relation rewrites preserve the normal form") {
  for (const ContextPtr& ctx : {ContextPtr(classical_context(3)), ContextPtr(classical_context(4)),
                                ContextPtr(classical_context(5)), ContextPtr(dual_context(4)), ContextPtr(dual_context(5))}) {
    const props::Verdict v = props::rewrite_uniqueness(ctx, 1000, 17);
    CHECK_MESSAGE(v.ok, v.detail);
  }
}

TEST_CASE("outputs are left-weighted chains") {
  for (const ContextPtr& ctx : {ContextPtr(classical_context(4)), ContextPtr(dual_context(4))}) {
    const props::Verdict v = props::left_weighted_outputs(ctx, 200, 3);
    CHECK_MESSAGE(v.ok, v.detail);
  }
}

TEST_CASE("B3 product letter law and rigidity criterion") {
  auto b3 = classical_context(3);
  std::mt19937_64 rng(23);
  auto first_letter = [&](Simple s) { return b3->word(s).front(); };
  auto last_letter = [&](Simple s) { return b3->word(s).back(); };
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const NormalForm a = oracle::evaluate(b3, oracle::random_word(*b3, rng, 10));
    const NormalForm b = oracle::evaluate(b3, oracle::random_word(*b3, rng, 10));
    if (!a.is_delta_power())
      CHECK(is_rigid(a) == (first_letter(iota(a)) == last_letter(phi(a))));
    const NormalForm ab = multiply(a, b);
    if (a.is_delta_power() || b.is_delta_power() || ab.is_delta_power()) continue;
    if (a.canonical_length() >= b.canonical_length()) CHECK(first_letter(iota(ab)) == first_letter(iota(a)));
    if (a.canonical_length() <= b.canonical_length()) CHECK(last_letter(phi(ab)) == last_letter(phi(b)));
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("word parsing") {
  auto b4 = classical_context(4);
  CHECK(parse_braid(b4, "2,1|1.2  2132") == parse_braid(b4, "2 1 1 2 2 1 3 2"));
  CHECK(parse_braid(b4, "-21") == parse_braid(b4, "-1 -2"));
  CHECK(parse_braid(b4, "D^-2") == delta_power(b4, -2));
  CHECK(parse_braid(b4, "-D^2") == delta_power(b4, -2));
  CHECK(parse_braid(b4, "") == NormalForm(b4));

  try {
    parse_braid(b4, "1 2 x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_braid(b4, "14"), ParseError);
  CHECK_THROWS_AS(parse_braid(b4, "-"), ParseError);
  CHECK_THROWS_AS(parse_braid(b4, "D^x"), ParseError);

  auto d4 = dual_context(4);
  CHECK(parse_braid(d4, "MANWA") == parse_braid(d4, "M A N W A"));
  CHECK(parse_braid(d4, "(1,3)") == parse_braid(d4, "A"));
  CHECK(parse_braid(d4, "{1,4}{2,3}") == from_simple(d4, d4->from_blocks({{1, 4}, {2, 3}})));
  CHECK(parse_braid(d4, "W N E").is_delta_power());
  CHECK(parse_braid(d4, "-A A") == NormalForm(d4));
  CHECK(parse_dual_token(*d4, "{1,3,4}") == d4->from_blocks({{1, 3, 4}}));
  CHECK(parse_dual_token(*d4, "D") == d4->delta());
  CHECK_THROWS_AS(parse_dual_token(*d4, "{1,3}{2,4}"), ParseError);
  CHECK_THROWS_AS(parse_dual_token(*d4, "(1,5)"), ParseError);
  CHECK_THROWS_AS(parse_braid(d4, "Q"), ParseError);
  CHECK_THROWS_AS(parse_braid(d4, "{1,2"), ParseError);

  auto d5 = dual_context(5);
  CHECK(parse_braid(d5, "(4,5) (3,4) (2,3) (1,2)").is_delta_power());
  CHECK_THROWS_AS(parse_braid(d5, "A"), ParseError);

  CHECK(make_context("A:4")->name() == "A:4");
  CHECK(make_context("dual:5")->name() == "dual:5");
  CHECK_THROWS_AS(make_context("B:4"), ParseError);
  CHECK_THROWS_AS(make_context("A4"), ParseError);
  CHECK_THROWS_AS(make_context("A:12"), std::out_of_range);
}
