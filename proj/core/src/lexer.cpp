#include "xcheck/lexer.hpp"

#include <stdexcept>

namespace xcheck {
namespace {

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_char(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

class Lexer {
 public:
  Lexer(std::string_view src, const LanguageProfile& profile) : src_(src), profile_(profile) {
    for (const auto& pair : profile_.open_close_pairs) {
      punctuation_.push_back(pair.open);
      punctuation_.push_back(pair.close);
    }
    punctuation_.push_back(profile_.stmt_terminator);
    max_munch_ = profile_.max_operator_length();
    for (const auto& p : punctuation_) max_munch_ = std::max(max_munch_, p.size());
  }

  void run(TokenStream& out) {
    while (i_ < src_.size()) {
      const unsigned char c = static_cast<unsigned char>(src_[i_]);
      if (c == '\n') {
        bump();
        line_start_ = true;
        continue;
      }
      if (is_space(c)) {
        bump();
        continue;
      }
      if (profile_.preprocessor_lines && line_start_ && c == '#') {
        skip_preprocessor_line();
        continue;
      }
      line_start_ = false;
      if (starts_with(profile_.line_comment)) {
        skip_until_newline();
        continue;
      }
      if (starts_with(profile_.block_comment.open)) {
        skip_block_comment(out);
        continue;
      }
      if (const StringDelimiter* d = string_delim(c)) {
        lex_string(*d, out);
        continue;
      }
      if (is_digit(c) || (c == '.' && i_ + 1 < src_.size() && is_digit(src_[i_ + 1]))) {
        lex_number(out);
        continue;
      }
      if (is_ident_start(c)) {
        lex_identifier(out);
        continue;
      }
      lex_operator(out);
    }
  }

 private:
  Position here() const { return Position{line_, column_, i_}; }

  void bump() {
    if (src_[i_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++i_;
  }

  bool starts_with(std::string_view s) const {
    return !s.empty() && src_.substr(i_, s.size()) == s;
  }

  void emit(TokenStream& out, TokenKind kind, std::size_t begin, Position pos) {
    out.tokens.push_back(Token{kind, std::string(src_.substr(begin, i_ - begin)), pos});
  }

  void skip_until_newline() {
    while (i_ < src_.size() && src_[i_] != '\n') bump();
  }

  void skip_preprocessor_line() {
    while (i_ < src_.size()) {
      if (src_[i_] == '\n') {
        // A backslash (optionally followed by '\r') continues the directive.
        std::size_t k = i_;
        if (k > 0 && src_[k - 1] == '\r') --k;
        if (k > 0 && src_[k - 1] == '\\') {
          bump();
          continue;
        }
        return;
      }
      bump();
    }
  }

  void skip_block_comment(TokenStream& out) {
    const Position start = here();
    const auto close = src_.find(profile_.block_comment.close, i_ + profile_.block_comment.open.size());
    if (close == std::string_view::npos) {
      out.issues.push_back({LexIssue::Kind::UnterminatedBlockComment, start,
                            "unterminated block comment"});
      // Resume lexing on the line after the opener.
      skip_until_newline();
      return;
    }
    const std::size_t stop = close + profile_.block_comment.close.size();
    while (i_ < stop) bump();
  }

  const StringDelimiter* string_delim(unsigned char c) const {
    for (const auto& d : profile_.string_delims)
      if (static_cast<unsigned char>(d.quote) == c) return &d;
    return nullptr;
  }

  void lex_string(const StringDelimiter& d, TokenStream& out) {
    const Position start = here();
    const std::size_t begin = i_;
    bump();
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == d.escape && i_ + 1 < src_.size()) {
        bump();
        bump();
        continue;
      }
      if (c == '\n') break;
      bump();
      if (c == d.quote) {
        emit(out, d.kind, begin, start);
        return;
      }
    }
    out.issues.push_back({LexIssue::Kind::UnterminatedString, start,
                          d.kind == TokenKind::CharLiteral ? "unterminated character literal"
                                                           : "unterminated string literal"});
    skip_until_newline();
  }

  void lex_number(TokenStream& out) {
    const Position start = here();
    const std::size_t begin = i_;
    bool is_float = src_[i_] == '.';
    const bool hex = src_.substr(i_, 2) == "0x" || src_.substr(i_, 2) == "0X";
    bump();
    while (i_ < src_.size()) {
      const char c = src_[i_];
      const char prev = src_[i_ - 1];
      const bool exponent_sign =
          (c == '+' || c == '-') &&
          (hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E'));
      if (is_ident_char(static_cast<unsigned char>(c)) || c == '.' || exponent_sign) {
        if (c == '.' || exponent_sign) is_float = true;
        if (!hex && (c == 'e' || c == 'E')) is_float = true;
        if (hex && (c == 'p' || c == 'P')) is_float = true;
        bump();
        continue;
      }
      break;
    }
    emit(out, is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, begin, start);
  }

  void lex_identifier(TokenStream& out) {
    const Position start = here();
    const std::size_t begin = i_;
    while (i_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[i_]))) bump();
    const auto text = src_.substr(begin, i_ - begin);
    emit(out, profile_.is_keyword(text) ? TokenKind::Keyword : TokenKind::Identifier, begin,
         start);
  }

  bool is_punctuation(std::string_view t) const {
    for (const auto& p : punctuation_)
      if (p == t) return true;
    return false;
  }

  void lex_operator(TokenStream& out) {
    const Position start = here();
    const std::size_t begin = i_;
    // Maximal munch: try the longest candidate first.
    for (std::size_t len = std::min(max_munch_, src_.size() - i_); len > 0; --len) {
      const auto candidate = src_.substr(i_, len);
      const bool op = profile_.is_operator(candidate);
      if (op || is_punctuation(candidate)) {
        for (std::size_t k = 0; k < len; ++k) bump();
        emit(out, op ? TokenKind::Operator : TokenKind::Punctuation, begin, start);
        return;
      }
    }
    bump();
    out.issues.push_back({LexIssue::Kind::UnknownCharacter, start,
                          "unknown character '" + std::string(src_.substr(begin, 1)) + "'"});
    emit(out, TokenKind::Punctuation, begin, start);
  }

  std::string_view src_;
  const LanguageProfile& profile_;
  std::vector<std::string> punctuation_;
  std::size_t max_munch_ = 1;
  std::size_t i_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
  bool line_start_ = true;
};

}  // namespace

std::string_view to_string(LexIssue::Kind kind) {
  switch (kind) {
    case LexIssue::Kind::UnterminatedString: return "unterminated-string";
    case LexIssue::Kind::UnterminatedBlockComment: return "unterminated-block-comment";
    case LexIssue::Kind::UnknownCharacter: return "unknown-character";
  }
  return "?";
}

TokenStream tokenize(std::string_view source, const LanguageProfile& profile,
                     std::string source_path) {
  TokenStream out;
  out.source_path = std::move(source_path);
  Lexer(source, profile).run(out);
  return out;
}

const Token& token_at(const TokenStream& stream, std::size_t index) {
  if (index >= stream.tokens.size())
    throw std::out_of_range("token index " + std::to_string(index) + " out of bounds (size " +
                            std::to_string(stream.tokens.size()) + ")");
  return stream.tokens[index];
}

TokenStream restrict_to_lines(const TokenStream& stream, std::uint32_t first_line,
                              std::uint32_t last_line) {
  TokenStream out;
  out.source_path = stream.source_path;
  for (const auto& t : stream.tokens)
    if (t.pos.line >= first_line && t.pos.line <= last_line) out.tokens.push_back(t);
  for (const auto& issue : stream.issues)
    if (issue.pos.line >= first_line && issue.pos.line <= last_line) out.issues.push_back(issue);
  return out;
}

}  // namespace xcheck
