#include "garside/golden.h"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "garside/conjugacy_graph.h"
#include "garside/dual.h"
#include "garside/dynamics.h"
#include "garside/period.h"
#include "garside/survey.h"
#include "garside/word.h"

namespace garside {

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::vector<std::size_t> repeat(const std::vector<std::size_t>& block, int n) {
  std::vector<std::size_t> out;
  for (int i = 0; i < n; ++i) out.push_back(block[static_cast<std::size_t>(i) % block.size()]);
  return out;
}

CaseResult sequence_case(const std::string& group, const std::string& word, const std::vector<std::size_t>& expected,
                         int rstar) {
  const ContextPtr ctx = make_context(group);
  const NormalForm x = parse_braid(ctx, word);
  const PeriodReport r = sc_sequence(x, static_cast<int>(expected.size()));
  bool ok = r.sizes == expected && r.sums_consistent && r.divisor_monotone;
  std::string detail = "sizes " + join(r.sizes);
  if (rstar > 0) {
    ok = ok && r.rstar == rstar && r.periodic_verified;
    detail += " r*=" + std::to_string(r.rstar);
  }
  if (!ok) detail += " (expected " + join(expected) + (rstar > 0 ? " r*=" + std::to_string(rstar) : "") + ")";
  return {ok, detail};
}

CaseResult b8_heavy() {
  const ContextPtr ctx = make_context("A:8");
  const NormalForm x = parse_braid(ctx, "246|24654321765432");
  CaseResult seq = sequence_case("A:8", "246|24654321765432", {4, 12, 40, 76, 4, 120, 4, 76, 40, 12, 4, 760}, 12);
  const ConjugacyGraph g = conjugacy_graph(enumerate_sc(power(x, 12)));
  std::vector<int> levels = vertex_levels(g, 12);
  std::sort(levels.begin(), levels.end());
  const std::vector<int> expected{1, 2, 3, 3, 3, 4, 4, 4, 4, 6, 6, 6, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12};
  const bool ok = seq.pass && levels == expected;
  return {ok, seq.detail + "; " + std::to_string(g.vertex_count()) + " vertices, levels " + join(levels)};
}

CaseResult b8_inf_sup() {
  const ContextPtr ctx = make_context("A:8");
  const NormalForm x = parse_braid(ctx, "246|24654321765432");
  const NormalForm c = from_artin_word(ctx, {1, 6});
  const NormalForm y = multiply(inverse(c), multiply(x, c));
  std::vector<int> infs, sups, want_inf, want_sup;
  NormalForm p = y;
  for (int n = 1; n <= 12; ++n) {
    if (n > 1) p = multiply(p, y);
    infs.push_back(p.inf());
    sups.push_back(p.sup());
    want_inf.push_back(n % 4 == 0 ? 0 : -1);
    want_sup.push_back(n % 3 == 0 ? 2 * n : 2 * n + 1);
  }
  const bool ok = infs == want_inf && sups == want_sup;
  return {ok, "inf " + join(infs) + " sup " + join(sups)};
}

CaseResult b3_theorem() {
  const ContextPtr ctx = make_context("A:3");
  int checked = 0;
  for (int k = 0; k <= 3; ++k)
    for (int l = 1; l <= 6; ++l) {
      std::string word = "D^" + std::to_string(2 * k) + " " + std::string(static_cast<std::size_t>(l), '1');
      const NormalForm x = parse_braid(ctx, word);
      for (int n = 1; n <= 6; ++n) {
        const NormalForm xn = power(x, n);
        const SCSet sc = enumerate_sc(xn);
        const NormalForm other = tau_conj(xn, 1);
        if (sc.size() != 2 || !sc.contains(xn) || !sc.contains(other))
          return {false, "SC of (" + word + ")^" + std::to_string(n) + " has " + std::to_string(sc.size()) + " elements"};
        ++checked;
      }
    }
  return {true, std::to_string(checked) + " powers, all with |SC| = 2"};
}

CaseResult structure_counts() {
  const ContextPtr b3 = make_context("A:3");
  const auto d4 = dual_context(4);
  std::size_t factorizations = 0;
  for (Simple a : d4->atoms())
    for (Simple b : d4->atoms())
      for (Simple c : d4->atoms()) {
        auto ab = d4->product(a, b);
        if (ab && d4->product(*ab, c) == d4->delta()) ++factorizations;
      }
  bool prefixes_ok = true;
  for (char letter : {'S', 'E', 'N', 'W', 'A', 'M'}) {
    const std::size_t want = (letter == 'A' || letter == 'M') ? 2 : 3;
    if (d4->strict_nontrivial_prefixes(d4->complement(d4->letter(letter))).size() != want) prefixes_ok = false;
  }
  const bool ok = b3->simple_count() == 6 && d4->simple_count() == 14 && factorizations == 16 && prefixes_ok;
  return {ok, "B3 simples " + std::to_string(b3->simple_count()) + ", B4* simples " +
                  std::to_string(d4->simple_count()) + ", δ factorizations " + std::to_string(factorizations) +
                  (prefixes_ok ? ", complement prefix counts 2/3" : ", complement prefix counts wrong")};
}

CaseResult survey_case(const std::string& group, int samples, const std::vector<int>& allowed) {
  SurveyOptions o;
  o.group = group;
  o.samples = samples;
  o.horizon = 8;
  o.seed = 20240601;
  const SurveySummary s = run_survey(o);
  bool ok = s.rigid >= 200;
  std::string detail = std::to_string(s.rigid) + " rigid circuits, periods";
  for (auto [p, count] : s.periods) {
    detail += " " + std::to_string(p) + "×" + std::to_string(count);
    if (std::find(allowed.begin(), allowed.end(), p) == allowed.end()) ok = false;
  }
  return {ok, detail};
}

std::vector<GoldenCase> build_cases() {
  std::vector<GoldenCase> cases;
  cases.push_back({"b4", "B4 21|12|2132: 6,18 alternating to n=6", 1, false,
                   [] { return sequence_case("A:4", "2 1 1 2 2 1 3 2", repeat({6, 18}, 6), 2); }});
  cases.push_back({"b5", "B5 213243|34|432: 6,6,42 repeating to n=9, r*=3", 5, false,
                   [] { return sequence_case("A:5", "213243|34|432", repeat({6, 6, 42}, 9), 3); }});
  cases.push_back({"b6", "B6 243215432|24: 4,12,28,12,4,84 repeating to n=12, r*=6", 30, false,
                   [] { return sequence_case("A:6", "243215432|24", repeat({4, 12, 28, 12, 4, 84}, 12), 6); }});
  cases.push_back({"b8x12", "B8 246|24654321765432 to n=12, r*=12, 24 vertices with levels", 600, true, b8_heavy});
  cases.push_back({"b8-infsup", "B8 inf/sup of powers of the conjugate by σ1σ6", 1, false, b8_inf_sup});
  cases.push_back({"dual-manwa", "B4* MANWA: 7 then 140", 10, false,
                   [] { return sequence_case("dual:4", "M A N W A", {7, 140}, 0); }});
  cases.push_back({"dual-daa", "B4* δAA: 4 then 12", 10, false,
                   [] { return sequence_case("dual:4", "D A A", {4, 12}, 0); }});
  cases.push_back({"dual-sseennww", "B4* SSEENNWW: 3,3,32 with r*=3", 10, false,
                   [] { return sequence_case("dual:4", "S S E E N N W W", {3, 3, 32}, 3); }});
  cases.push_back({"b3-theorem", "B3 Δ^{2k}σ1^ℓ: |SC| = 2 at every power", 60, false, b3_theorem});
  cases.push_back({"structure", "simple counts, δ factorizations, complement prefixes", 5, false, structure_counts});
  cases.push_back({"survey-b3", "B3 survey: periods ⊆ {1}", 120, false, [] { return survey_case("A:3", 400, {1}); }});
  cases.push_back({"survey-b4", "B4 survey: periods ⊆ {1,2}", 120, false, [] { return survey_case("A:4", 700, {1, 2}); }});
  cases.push_back(
      {"survey-dual4", "B4* survey: periods ⊆ {1,2,3}", 120, false, [] { return survey_case("dual:4", 500, {1, 2, 3}); }});
  return cases;
}

}  // namespace

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = build_cases();
  return cases;
}

CaseReport run_case(const GoldenCase& c) {
  CaseReport r;
  r.name = c.name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const CaseResult res = c.run();
    r.pass = res.pass;
    r.detail = res.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.within_time = r.seconds <= c.time_limit_seconds;
  return r;
}

}  // namespace garside
