#include "xcheck/token.hpp"

namespace xcheck {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::IntLiteral: return "int-literal";
    case TokenKind::FloatLiteral: return "float-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::CharLiteral: return "char-literal";
  }
  return "?";
}

Position Token::end() const {
  Position p = pos;
  for (char c : text) {
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  p.offset += text.size();
  return p;
}

Span span_of(const Token& tok) { return Span{tok.pos, tok.end(), false}; }

Span join(const Span& first, const Span& last) {
  return Span{first.start, last.end, first.recovered || last.recovered};
}

}  // namespace xcheck
