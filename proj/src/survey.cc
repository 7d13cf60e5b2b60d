#include "garside/survey.h"

#include <atomic>
#include <fstream>
#include <random>
#include <thread>

#include <json.hpp>

#include "garside/dynamics.h"
#include "garside/period.h"
#include "garside/word.h"

namespace garside {

using ordered_json = nlohmann::ordered_json;

std::string to_jsonl(const SurveyRecord& r) {
  ordered_json j;
  j["group"] = r.group;
  j["word"] = r.word;
  j["circuit"] = r.circuit;
  j["rigid"] = r.rigid;
  j["horizon"] = r.horizon;
  j["sizes"] = r.sizes;
  j["rstar"] = r.rstar;
  j["seed"] = r.seed;
  j["budgetExceeded"] = r.budget_exceeded;
  return j.dump();
}

SurveyRecord parse_record(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    SurveyRecord r;
    r.group = j.at("group").get<std::string>();
    r.word = j.at("word").get<std::string>();
    r.circuit = j.value("circuit", std::string{});
    r.rigid = j.value("rigid", false);
    r.horizon = j.value("horizon", 0);
    r.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    r.rstar = j.at("rstar").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.budget_exceeded = j.at("budgetExceeded").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad survey record: ") + e.what());
  }
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::string random_word(const std::string& group, int length, std::uint64_t seed) {
  const ContextPtr ctx = make_context(group);
  const auto& atoms = ctx->atoms();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::bernoulli_distribution negative(0.5);
  std::string word;
  for (int i = 0; i < length; ++i) {
    if (i > 0) word += ' ';
    const Simple a = atoms[pick(rng)];
    if (negative(rng)) word += '-';
    word += ctx->render(a);
  }
  return word;
}

SurveyRecord run_sample(const std::string& group, int length, int horizon, std::uint64_t seed, const Budget& budget) {
  SurveyRecord r;
  r.group = group;
  r.horizon = horizon;
  r.seed = seed;
  r.word = random_word(group, length, seed);
  const ContextPtr ctx = make_context(group);
  try {
    const NormalForm c = slide_to_circuit(parse_braid(ctx, r.word), budget).element;
    r.circuit = to_string(c);
    r.rigid = is_rigid(c) && !c.is_delta_power();
    if (r.rigid) {
      EnumerateOptions opts;
      opts.budget = budget;
      const PeriodReport rep = sc_sequence(c, horizon, opts);
      r.sizes = rep.sizes;
      r.rstar = rep.rstar;
    }
  } catch (const BudgetExceeded&) {
    r.budget_exceeded = true;
    r.rigid = false;
    r.sizes.clear();
    r.rstar = 0;
  }
  return r;
}

SurveySummary run_survey(const SurveyOptions& options, const std::vector<SurveyRecord>& cached) {
  if (options.samples < 1) throw std::invalid_argument("survey needs at least one sample");
  make_context(options.group);
  const std::size_t n = static_cast<std::size_t>(options.samples);
  std::vector<SurveyRecord> records(n);
  std::vector<bool> done(n, false);
  std::map<std::uint64_t, const SurveyRecord*> by_seed;
  for (const SurveyRecord& r : cached)
    if (r.group == options.group && r.horizon == options.horizon) by_seed[r.seed] = &r;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t s = sample_seed(options.seed, i);
    auto it = by_seed.find(s);
    if (it != by_seed.end() && it->second->word == random_word(options.group, options.length, s)) {
      records[i] = *it->second;
      done[i] = true;
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;)
      if (!done[i])
        records[i] = run_sample(options.group, options.length, options.horizon, sample_seed(options.seed, i),
                                options.budget);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SurveySummary summary;
  for (const SurveyRecord& r : records) {
    if (r.budget_exceeded) ++summary.budget_overruns;
    if (r.rigid) {
      ++summary.rigid;
      ++summary.periods[r.rstar];
    }
  }
  summary.records = std::move(records);
  return summary;
}

std::vector<SurveyRecord> read_cache(const std::string& path) {
  std::vector<SurveyRecord> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(parse_record(line));
  return out;
}

void append_cache(const std::string& path, const std::vector<SurveyRecord>& records) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file " + path);
  for (const SurveyRecord& r : records) out << to_jsonl(r) << '\n';
}

}  // namespace garside
