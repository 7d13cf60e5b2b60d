#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "garside/budget.h"

namespace garside {

/// One sampled braid. `rigid` means the sliding circuit reached is rigid with
/// positive canonical length; sizes and rstar are filled only then.
struct SurveyRecord {
  std::string group;
  std::string word;
  std::string circuit;
  bool rigid = false;
  int horizon = 0;
  std::vector<std::size_t> sizes;
  int rstar = 0;
  std::uint64_t seed = 0;
  bool budget_exceeded = false;

  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

/// Single-line JSON (no trailing newline).
std::string to_jsonl(const SurveyRecord& r);
/// Throws std::invalid_argument on malformed input.
SurveyRecord parse_record(const std::string& line);

struct SurveyOptions {
  std::string group = "A:4";
  int length = 12;
  int samples = 100;
  int horizon = 8;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  Budget budget{100000, 200000};
};

struct SurveySummary {
  std::vector<SurveyRecord> records;
  std::map<int, std::size_t> periods;  // r* -> count over rigid records
  std::size_t rigid = 0;
  std::size_t budget_overruns = 0;
};

/// Seed of sample `index` in a survey seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

/// A uniform random word of `length` signed atoms, rendered in the word syntax.
std::string random_word(const std::string& group, int length, std::uint64_t seed);

/// Draws, slides and analyses one sample; budget overruns are recorded.
SurveyRecord run_sample(const std::string& group, int length, int horizon, std::uint64_t seed, const Budget& budget);

/// Samples are independent; the result does not depend on `jobs`. Records in
/// `cached` with matching group, seed, word and horizon are reused.
SurveySummary run_survey(const SurveyOptions& options, const std::vector<SurveyRecord>& cached = {});

std::vector<SurveyRecord> read_cache(const std::string& path);
void append_cache(const std::string& path, const std::vector<SurveyRecord>& records);

}  // namespace garside
