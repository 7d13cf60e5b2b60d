#include "garside/budget.h"

#include <cstdlib>
#include <sstream>

namespace garside {

namespace {

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || v == 0) throw std::invalid_argument("bad budget value '" + s + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

Budget Budget::parse(const std::string& text) {
  Budget b;
  if (text.find('=') == std::string::npos) {
    b.max_slides = b.max_elements = parse_count(text);
    return b;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad budget item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::size_t value = parse_count(item.substr(eq + 1));
    if (key == "slides")
      b.max_slides = value;
    else if (key == "elements")
      b.max_elements = value;
    else
      throw std::invalid_argument("unknown budget key '" + key + "'");
  }
  return b;
}

Budget Budget::from_env() {
  const char* env = std::getenv("GARSIDE_BUDGET");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

}  // namespace garside
