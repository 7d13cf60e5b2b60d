// Command-line front end: normal forms, SC sequences, conjugacy graphs,
// random surveys and the golden reproduction table.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/conjugacy_graph.h"
#include "garside/dynamics.h"
#include "garside/golden.h"
#include "garside/period.h"
#include "garside/survey.h"
#include "garside/word.h"

using namespace garside;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kNoRigid = 3, kBudget = 4 };

struct Input {
  std::string group = "A:4";
  std::string word;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("--group", in.group, "A:m (classical) or dual:m")->capture_default_str();
  cmd->add_option("word", in.word, "braid word, e.g. \"2 1 -3 D\" or \"M A N W A\"")->required();
}

// Slides the input to a circuit and insists on a rigid one.
NormalForm rigid_circuit(const Input& in, const Budget& budget) {
  const NormalForm x = parse_braid(make_context(in.group), in.word);
  NormalForm c = slide_to_circuit(x, budget).element;
  if (!is_rigid(c)) {
    std::cerr << "no rigid conjugate: sliding circuit element " << to_string(c) << " is not rigid\n";
    std::exit(kNoRigid);
  }
  return c;
}

int cmd_normalize(const Input& in) {
  const NormalForm x = parse_braid(make_context(in.group), in.word);
  std::cout << to_string(x) << " rigid=" << (is_rigid(x) ? "true" : "false") << '\n';
  std::cout << "inf=" << x.inf() << " sup=" << x.sup() << " len=" << x.canonical_length() << '\n';
  return kOk;
}

int cmd_sc_seq(const Input& in, int horizon, const std::string& format, unsigned threads, const Budget& budget) {
  const NormalForm x = rigid_circuit(in, budget);
  EnumerateOptions opts;
  opts.budget = budget;
  opts.threads = threads;
  const PeriodReport r = sc_sequence(x, horizon, opts);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["group"] = in.group;
    j["word"] = in.word;
    j["circuit"] = to_string(x);
    j["horizon"] = horizon;
    j["sizes"] = r.sizes;
    j["primitive"] = r.primitive_counts;
    j["primitiveLevels"] = r.primitive_levels;
    j["rstar"] = r.rstar;
    j["periodicVerified"] = r.periodic_verified;
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "n,size,primitive,rstar\n";
    for (int n = 1; n <= horizon; ++n)
      std::cout << n << ',' << r.sizes[n - 1] << ',' << r.primitive_counts[n - 1] << ',' << r.rstar << '\n';
  } else {
    std::cout << "circuit " << to_string(x) << '\n';
    std::printf("%4s %10s %10s\n", "n", "|SC|", "primitive");
    for (int n = 1; n <= horizon; ++n) std::printf("%4d %10zu %10zu\n", n, r.sizes[n - 1], r.primitive_counts[n - 1]);
    std::cout << "r*=" << r.rstar << (r.periodic_verified ? " (periodic over 1.." : " (not periodic over 1..")
              << horizon << ")\n";
  }
  return kOk;
}

int cmd_graph(const Input& in, int power_n, bool minimal, unsigned threads, const Budget& budget) {
  const NormalForm x = rigid_circuit(in, budget);
  EnumerateOptions opts;
  opts.budget = budget;
  opts.threads = threads;
  ConjugacyGraph g = conjugacy_graph(enumerate_sc(power(x, power_n), opts));
  if (minimal) g = minimal_arrows(g);
  std::cout << dot_export(g);
  return kOk;
}

int cmd_survey(SurveyOptions opts, const std::string& cache) {
  std::vector<SurveyRecord> cached;
  if (!cache.empty()) cached = read_cache(cache);
  const SurveySummary s = run_survey(opts, cached);
  if (!cache.empty()) {
    std::vector<SurveyRecord> fresh;
    for (const SurveyRecord& r : s.records)
      if (std::find(cached.begin(), cached.end(), r) == cached.end()) fresh.push_back(r);
    append_cache(cache, fresh);
  }
  std::cout << opts.group << ": " << opts.samples << " samples, " << s.rigid << " rigid circuits, "
            << s.budget_overruns << " over budget\n";
  for (auto [p, count] : s.periods) std::cout << "  r*=" << p << "  " << count << '\n';
  return kOk;
}

int cmd_reproduce(const std::string& only, bool skip_heavy) {
  bool all = true;
  int ran = 0;
  for (const GoldenCase& c : golden_cases()) {
    if (!only.empty() && c.name != only) continue;
    if (skip_heavy && c.heavy && only.empty()) continue;
    const CaseReport r = run_case(c);
    const bool ok = r.pass && r.within_time;
    all = all && ok;
    ++ran;
    std::printf("%-4s %-14s %8.2fs  %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), r.seconds, r.detail.c_str());
    if (r.pass && !r.within_time) std::printf("     exceeded the %.0fs limit\n", c.time_limit_seconds);
  }
  if (ran == 0) {
    std::cerr << "no case named '" << only << "'\n";
    return kMismatch;
  }
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside normal forms and sliding circuits of braid groups"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for SC enumeration (0 = all cores)");

  Input in;
  auto* normalize = app.add_subcommand("normalize", "print the Garside normal form");
  add_input(normalize, in);

  int horizon = 12;
  std::string format = "text";
  auto* sc_seq = app.add_subcommand("sc-seq", "sizes of SC(x^n) and the detected period");
  add_input(sc_seq, in);
  sc_seq->add_option("-N,--horizon", horizon, "largest power")->check(CLI::PositiveNumber)->capture_default_str();
  sc_seq->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}))->capture_default_str();

  int power_n = 1;
  bool minimal = false;
  auto* graph = app.add_subcommand("graph", "DOT conjugacy graph of x^power");
  add_input(graph, in);
  graph->add_option("--power", power_n)->check(CLI::PositiveNumber)->capture_default_str();
  graph->add_flag("--minimal", minimal, "keep only arrows that are not same-colour compositions");

  SurveyOptions survey_opts;
  survey_opts.horizon = 8;
  std::string cache;
  auto* survey = app.add_subcommand("survey", "period histogram over random words");
  survey->add_option("--group", survey_opts.group)->capture_default_str();
  survey->add_option("--length", survey_opts.length)->check(CLI::PositiveNumber)->capture_default_str();
  survey->add_option("--samples", survey_opts.samples)->check(CLI::PositiveNumber)->capture_default_str();
  survey->add_option("--horizon", survey_opts.horizon)->check(CLI::PositiveNumber)->capture_default_str();
  survey->add_option("--seed", survey_opts.seed)->capture_default_str();
  survey->add_option("--jobs", survey_opts.jobs)->capture_default_str();
  survey->add_option("--cache", cache, "JSONL file of records to reuse and extend");

  std::string only;
  bool skip_heavy = false;
  auto* reproduce = app.add_subcommand("reproduce", "run the embedded golden table");
  reproduce->add_option("--only", only, "run a single case by name");
  reproduce->add_flag("--skip-heavy", skip_heavy, "skip cases marked heavy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    const Budget budget = Budget::from_env();
    if (*normalize) return cmd_normalize(in);
    if (*sc_seq) return cmd_sc_seq(in, horizon, format, threads, budget);
    if (*graph) return cmd_graph(in, power_n, minimal, threads, budget);
    if (*survey) {
      survey_opts.budget.max_slides = std::min(survey_opts.budget.max_slides, budget.max_slides);
      survey_opts.budget.max_elements = std::min(survey_opts.budget.max_elements, budget.max_elements);
      return cmd_survey(survey_opts, cache);
    }
    if (*reproduce) return cmd_reproduce(only, skip_heavy);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kOk;
}
