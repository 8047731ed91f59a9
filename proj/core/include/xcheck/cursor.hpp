#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "xcheck/profile.hpp"
#include "xcheck/token.hpp"

namespace xcheck {

/// Read position over a token sequence. The cursor never owns tokens.
class TokenCursor {
 public:
  explicit TokenCursor(std::span<const Token> tokens, std::size_t index = 0)
      : tokens_(tokens), index_(index) {}

  bool at_end() const { return index_ >= tokens_.size(); }
  std::size_t index() const { return index_; }
  std::size_t size() const { return tokens_.size(); }
  void reset(std::size_t index) { index_ = index; }
  void advance() { ++index_; }

  /// nullptr past the end.
  const Token* peek(std::size_t ahead = 0) const {
    return index_ + ahead < tokens_.size() ? &tokens_[index_ + ahead] : nullptr;
  }
  bool next_is(std::string_view text) const {
    const Token* t = peek();
    return t != nullptr && t->text == text;
  }
  bool next_is_keyword(std::string_view kw) const {
    const Token* t = peek();
    return t != nullptr && t->is_keyword(kw);
  }

  std::span<const Token> tokens() const { return tokens_; }

 private:
  std::span<const Token> tokens_;
  std::size_t index_;
};

enum class ScanStatus { Ok, EndOfInput, SuffixNotFound, Unbalanced };

struct ScanResult {
  std::vector<Token> tokens;
  ScanStatus status = ScanStatus::Ok;
  /// Opening token consumed by `balanced`.
  std::optional<Token> open;
  /// Suffix consumed by `skip_to`, or the matching close consumed by `balanced`.
  std::optional<Token> close;

  bool ok() const { return status == ScanStatus::Ok; }
};

/// Consumes one token; nullopt (EndOfInput) at the end of the stream.
std::optional<Token> any_token(TokenCursor& cursor);

/// Collects tokens until `suffix` is consumed at bracket depth zero. The
/// suffix is not part of the result. A depth-zero token whose text is in
/// `stop_before` ends the scan without being consumed. Reaching the end first
/// yields SuffixNotFound with everything collected so far.
ScanResult skip_to(TokenCursor& cursor, std::string_view suffix,
                   const LanguageProfile& profile,
                   std::span<const std::string_view> stop_before = {});

/// Cursor must sit on `open`. Consumes through the matching `close` and
/// returns the interior. Hitting the end first yields Unbalanced.
ScanResult balanced(TokenCursor& cursor, std::string_view open, std::string_view close);

}  // namespace xcheck
