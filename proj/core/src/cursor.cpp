#include "xcheck/cursor.hpp"

#include <algorithm>

namespace xcheck {

std::optional<Token> any_token(TokenCursor& cursor) {
  const Token* t = cursor.peek();
  if (t == nullptr) return std::nullopt;
  cursor.advance();
  return *t;
}

ScanResult skip_to(TokenCursor& cursor, std::string_view suffix, const LanguageProfile& profile,
                   std::span<const std::string_view> stop_before) {
  ScanResult result;
  std::size_t depth = 0;
  while (const Token* next = cursor.peek()) {
    if (depth == 0) {
      if (next->text == suffix) {
        result.close = *any_token(cursor);
        return result;
      }
      if (std::find(stop_before.begin(), stop_before.end(), next->text) != stop_before.end())
        return result;
    }
    Token tok = *any_token(cursor);
    if (profile.is_open(tok.text)) {
      ++depth;
    } else if (profile.is_close(tok.text) && depth > 0) {
      --depth;
    }
    result.tokens.push_back(std::move(tok));
  }
  result.status = ScanStatus::SuffixNotFound;
  return result;
}

ScanResult balanced(TokenCursor& cursor, std::string_view open, std::string_view close) {
  ScanResult result;
  if (!cursor.next_is(open)) {
    result.status = cursor.at_end() ? ScanStatus::EndOfInput : ScanStatus::Unbalanced;
    return result;
  }
  result.open = *any_token(cursor);
  std::size_t depth = 0;
  while (auto tok = any_token(cursor)) {
    if (tok->text == close) {
      if (depth == 0) {
        result.close = std::move(*tok);
        return result;
      }
      --depth;
    } else if (tok->text == open) {
      ++depth;
    }
    result.tokens.push_back(std::move(*tok));
  }
  result.status = ScanStatus::Unbalanced;
  return result;
}

}  // namespace xcheck
