#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "xcheck/profile.hpp"
#include "xcheck/token.hpp"

namespace xcheck {

struct LexIssue {
  enum class Kind { UnterminatedString, UnterminatedBlockComment, UnknownCharacter };

  Kind kind;
  Position pos;
  std::string message;
};

std::string_view to_string(LexIssue::Kind kind);

/// Tokens of one file in strictly increasing offset order. Lexing never
/// fails; problems are recorded in `issues`.
struct TokenStream {
  std::vector<Token> tokens;
  std::string source_path;
  std::vector<LexIssue> issues;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  auto begin() const { return tokens.begin(); }
  auto end() const { return tokens.end(); }
};

TokenStream tokenize(std::string_view source, const LanguageProfile& profile,
                     std::string source_path = {});

/// Throws std::out_of_range when `index` is past the end.
const Token& token_at(const TokenStream& stream, std::size_t index);

/// Keeps only tokens whose line lies in [first_line, last_line]. Positions
/// are left untouched.
TokenStream restrict_to_lines(const TokenStream& stream, std::uint32_t first_line,
                              std::uint32_t last_line);

}  // namespace xcheck
