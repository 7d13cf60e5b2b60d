// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance [--only N]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "garside/golden.h"
#include "properties.h"

using namespace garside;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome golden(std::initializer_list<const char*> names) {
  Outcome out;
  for (const char* name : names) {
    for (const GoldenCase& c : golden_cases()) {
      if (c.name != name) continue;
      const CaseReport r = run_case(c);
      const bool ok = r.pass && r.within_time;
      out.ok = out.ok && ok;
      char buf[64];
      std::snprintf(buf, sizeof buf, " %.2fs", r.seconds);
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += std::string(name) + ": " + r.detail + buf + (r.within_time ? "" : " (over time limit)");
    }
  }
  return out;
}

Outcome properties() {
  Outcome out;
  auto take = [&](const std::string& label, const props::Verdict& v) {
    out.ok = out.ok && v.ok;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += label + (v.ok ? " ok (" + v.detail + ")" : " FAILED: " + v.detail);
  };
  std::size_t rewrites = 0;
  bool rewrites_ok = true;
  std::string rewrite_fail;
  for (const ContextPtr& ctx : {ContextPtr(classical_context(3)), ContextPtr(classical_context(4)),
                                ContextPtr(classical_context(5)), ContextPtr(dual_context(4)), ContextPtr(dual_context(5))}) {
    const props::Verdict v = props::rewrite_uniqueness(ctx, 1000, 101);
    rewrites += v.cases;
    if (!v.ok) rewrites_ok = false, rewrite_fail = v.detail;
  }
  take("rewrite uniqueness", {rewrites_ok, rewrites_ok ? std::to_string(rewrites) + " cases" : rewrite_fail, rewrites});
  props::Verdict lw = props::left_weighted_outputs(classical_context(4), 700, 202);
  const props::Verdict lw2 = props::left_weighted_outputs(dual_context(4), 700, 203);
  if (!lw2.ok) lw = lw2;
  else if (lw.ok) lw.detail = std::to_string(lw.cases + lw2.cases) + " outputs";
  take("left-weighted chains", lw);
  take("rigid-power divisibility", props::rigid_power_divisibility(15, 303));
  take("π^d embedding", props::power_embedding());
  take("domino pass", props::domino_matches_generic());
  take("oracle closure", props::oracle_equivalence());
  take("DOT determinism", props::dot_determinism());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"B4 21|12|2132 sizes", [] { return golden({"b4"}); }},
      {"B5 213243|34|432 sizes and period", [] { return golden({"b5"}); }},
      {"B6 243215432|24 sizes and period", [] { return golden({"b6"}); }},
      {"B8 246|24654321765432 sizes, period, levels", [] { return golden({"b8x12"}); }},
      {"B8 inf/sup of conjugate powers", [] { return golden({"b8-infsup"}); }},
      {"B4* examples", [] { return golden({"dual-manwa", "dual-daa", "dual-sseennww"}); }},
      {"B3 theorem", [] { return golden({"b3-theorem"}); }},
      {"structure counts", [] { return golden({"structure"}); }},
      {"property suites", properties},
      {"surveys", [] { return golden({"survey-b3", "survey-b4", "survey-dual4"}); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::printf("criterion %2d %s  %-44s %7.2fs  %s\n", id, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
