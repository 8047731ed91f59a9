#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace xcheck {

/// Source location. Lines and columns are 1-based, columns count bytes.
struct Position {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  std::size_t offset = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position& a, const Position& b) {
    return a.offset <=> b.offset;
  }
};

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,
  Operator,
  Punctuation,
  IntLiteral,
  FloatLiteral,
  StringLiteral,
  CharLiteral,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Punctuation;
  std::string text;
  Position pos;

  /// Position one past the last byte of the token.
  Position end() const;

  bool is(std::string_view t) const { return text == t; }
  bool is_identifier() const { return kind == TokenKind::Identifier; }
  bool is_keyword(std::string_view kw) const {
    return kind == TokenKind::Keyword && text == kw;
  }
};

/// Half-open source range [start, end). `recovered` marks nodes built from
/// input that needed error recovery (missing terminator, unbalanced bracket).
struct Span {
  Position start;
  Position end;
  bool recovered = false;

  friend bool operator==(const Span&, const Span&) = default;
};

Span span_of(const Token& tok);
Span join(const Span& first, const Span& last);

}  // namespace xcheck
