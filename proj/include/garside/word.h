#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/classical.h"
#include "garside/dual.h"
#include "garside/normal_form.h"

namespace garside {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// One letter of an input word: a simple, the inverse of a simple, or Δ^k.
struct Letter {
  enum class Type { Simple, Inverse, Delta };
  Type type = Type::Simple;
  Simple simple{};
  int exponent = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses the textual word syntax shared with the CLI.
///
/// Tokens are separated by whitespace, ',', '|' or '.'. A leading '-' inverts
/// the whole token. "D" is Δ and "D^k" is Δ^k.
///   classical: a run of digits 1..m-1, one Artin generator per digit
///              ("2132" is σ₂σ₁σ₃σ₂);
///   dual:      letters S,E,N,W,A,M (m = 4), a band "(i,j)", or a run of brace
///              groups "{1,3,4}" / "{1,4}{2,3}" naming one non-crossing partition.
Word parse_word(const Context& ctx, std::string_view text);

/// A single dual simple: a letter, "(i,j)" or brace groups.
Simple parse_dual_token(const DualContext& ctx, std::string_view token);

NormalForm from_word(const ContextPtr& ctx, const Word& word);
NormalForm parse_braid(const ContextPtr& ctx, std::string_view text);

/// Signed Artin generators (k means σ_k, -k its inverse); classical only.
/// Throws std::out_of_range when |token| is not in 1..m-1.
NormalForm from_artin_word(const ContextPtr& ctx, const std::vector<int>& tokens);

/// "A:m" (classical) or "dual:m". Throws ParseError on bad syntax and
/// std::out_of_range when m is unsupported.
ContextPtr make_context(std::string_view spec);

}  // namespace garside
