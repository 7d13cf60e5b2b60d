#include "garside/word.h"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace garside {

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '|' || c == '.'; }

struct Token {
  std::string_view text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    int depth = 0;
    while (i < text.size() && (depth > 0 || !is_separator(text[i]))) {
      if (text[i] == '{' || text[i] == '(') ++depth;
      if (text[i] == '}' || text[i] == ')') {
        if (depth == 0) throw ParseError("unbalanced bracket", i);
        --depth;
      }
      ++i;
    }
    if (depth != 0) throw ParseError("unterminated bracket", start);
    out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

int parse_int(std::string_view s, std::size_t position) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("expected an integer, got '" + std::string(s) + "'", position);
  return v;
}

std::vector<int> parse_int_list(std::string_view inner, std::size_t position) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i <= inner.size()) {
    std::size_t j = inner.find(',', i);
    if (j == std::string_view::npos) j = inner.size();
    std::string_view part = inner.substr(i, j - i);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    out.push_back(parse_int(part, position));
    i = j + 1;
  }
  return out;
}

// Body of a dual token, split into its simples (without sign handling).
std::vector<Simple> dual_simples(const DualContext& ctx, std::string_view body, std::size_t position) {
  std::vector<Simple> out;
  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (c == '(') {
      const std::size_t close = body.find(')', i);
      auto v = parse_int_list(body.substr(i + 1, close - i - 1), position + i);
      if (v.size() != 2) throw ParseError("band generator needs exactly two punctures", position + i);
      for (int p : v)
        if (p < 1 || p > ctx.strands()) throw ParseError("puncture " + std::to_string(p) + " out of range", position + i);
      if (v[0] == v[1]) throw ParseError("band generator needs two distinct punctures", position + i);
      out.push_back(ctx.band(v[0], v[1]));
      i = close + 1;
    } else if (c == '{') {
      DualContext::Blocks blocks;
      while (i < body.size() && body[i] == '{') {
        const std::size_t close = body.find('}', i);
        auto v = parse_int_list(body.substr(i + 1, close - i - 1), position + i);
        for (int p : v)
          if (p < 1 || p > ctx.strands())
            throw ParseError("puncture " + std::to_string(p) + " out of range", position + i);
        blocks.push_back(std::move(v));
        i = close + 1;
      }
      try {
        out.push_back(ctx.from_blocks(blocks));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), position);
      }
    } else {
      try {
        out.push_back(ctx.letter(c));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), position + i);
      }
      ++i;
    }
  }
  return out;
}

}  // namespace

Simple parse_dual_token(const DualContext& ctx, std::string_view token) {
  auto simples = dual_simples(ctx, token, 0);
  if (simples.size() != 1) throw ParseError("expected a single simple, got '" + std::string(token) + "'", 0);
  return simples.front();
}

Word parse_word(const Context& ctx, std::string_view text) {
  Word word;
  for (const Token& tok : tokenize(text)) {
    std::string_view body = tok.text;
    const bool negative = body.front() == '-';
    if (negative) body.remove_prefix(1);
    if (body.empty()) throw ParseError("dangling '-'", tok.position);

    if (body.front() == 'D' && (body.size() == 1 || body[1] == '^')) {
      int k = 1;
      if (body.size() > 1) k = parse_int(body.substr(2), tok.position);
      word.push_back({Letter::Type::Delta, {}, negative ? -k : k});
      continue;
    }

    std::vector<Simple> simples;
    if (ctx.kind() == Kind::Classical) {
      const auto& cc = static_cast<const ClassicalContext&>(ctx);
      for (std::size_t i = 0; i < body.size(); ++i) {
        const char c = body[i];
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError(std::string("unexpected character '") + c + "'", tok.position + i);
        const int g = c - '0';
        if (g < 1 || g >= ctx.strands())
          throw ParseError("generator " + std::to_string(g) + " outside 1.." + std::to_string(ctx.strands() - 1),
                           tok.position + i);
        simples.push_back(cc.generator(g));
      }
    } else {
      simples = dual_simples(static_cast<const DualContext&>(ctx), body, tok.position + (negative ? 1 : 0));
    }
    if (negative) {
      for (auto it = simples.rbegin(); it != simples.rend(); ++it) word.push_back({Letter::Type::Inverse, *it, 0});
    } else {
      for (Simple s : simples) word.push_back({Letter::Type::Simple, s, 0});
    }
  }
  return word;
}

NormalForm from_word(const ContextPtr& ctx, const Word& word) {
  NormalFormBuilder b(ctx);
  for (const Letter& l : word) {
    switch (l.type) {
      case Letter::Type::Simple: b.append(l.simple); break;
      case Letter::Type::Inverse: b.append_inverse(l.simple); break;
      case Letter::Type::Delta: b.append_delta(l.exponent); break;
    }
  }
  return b.build();
}

NormalForm parse_braid(const ContextPtr& ctx, std::string_view text) { return from_word(ctx, parse_word(*ctx, text)); }

NormalForm from_artin_word(const ContextPtr& ctx, const std::vector<int>& tokens) {
  if (ctx->kind() != Kind::Classical) throw std::invalid_argument("Artin words need a classical context");
  const auto& cc = static_cast<const ClassicalContext&>(*ctx);
  NormalFormBuilder b(ctx);
  for (int t : tokens) {
    const int g = t < 0 ? -t : t;
    if (g < 1 || g >= ctx->strands())
      throw std::out_of_range("Artin generator " + std::to_string(t) + " out of range for " + ctx->name());
    if (t > 0)
      b.append(cc.generator(g));
    else
      b.append_inverse(cc.generator(g));
  }
  return b.build();
}

ContextPtr make_context(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("group spec must look like A:m or dual:m", 0);
  const std::string_view family = spec.substr(0, colon);
  const int m = parse_int(spec.substr(colon + 1), colon + 1);
  if (family == "A") return classical_context(m);
  if (family == "dual") return dual_context(m);
  throw ParseError("unknown group family '" + std::string(family) + "'", 0);
}

}  // namespace garside
