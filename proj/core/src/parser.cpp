// First parsing step: recognize control-flow statements over the token
// stream, leaving every expression slot as a wildcard. Anything that is not
// control flow becomes a WildcardStmt running to the next terminator. When a
// structural parse fails partway the parser drops exactly one token and
// retries from the next one.

#include <algorithm>

#include "xcheck/cursor.hpp"
#include "xcheck/parser.hpp"

namespace xcheck {
namespace {

constexpr std::string_view kBlockOpen = "{";
constexpr std::string_view kBlockClose = "}";

Span tokens_span(std::span<const Token> toks, std::size_t first, std::size_t last_exclusive) {
  return Span{toks[first].pos, toks[last_exclusive - 1].end(), false};
}

Expr wildcard_slot(std::vector<Token> tokens, const Token& anchor) {
  Span span = tokens.empty() ? Span{anchor.pos, anchor.pos, false}
                             : Span{tokens.front().pos, tokens.back().end(), false};
  return make_wildcard(std::move(tokens), span);
}

struct Body {
  StmtList stmts;
  std::vector<Token> syntax;
};

class StatementParser {
 public:
  StatementParser(const LanguageProfile& profile, const ParseOptions& options,
                  std::vector<Token>& skipped)
      : profile_(profile), options_(options), skipped_(skipped) {}

  StmtList parse_list(std::span<const Token> toks, std::size_t depth,
                      std::vector<std::size_t>* progress = nullptr) {
    TokenCursor c(toks);
    StmtList out;
    while (!c.at_end()) {
      const std::size_t start = c.index();
      const std::size_t skipped_mark = skipped_.size();
      if (auto s = parse_statement(c, depth)) {
        out.push_back(std::move(*s));
      } else {
        // Sliding window: forget the partial attempt, drop one token.
        skipped_.resize(skipped_mark);
        c.reset(start);
        skipped_.push_back(*c.peek());
        c.advance();
      }
      if (progress != nullptr) progress->push_back(c.index());
    }
    return out;
  }

 private:
  std::optional<Stmt> parse_statement(TokenCursor& c, std::size_t depth) {
    const Token& t = *c.peek();
    if (t.kind == TokenKind::Keyword) {
      if (t.text == "if") return parse_if(c, depth);
      if (t.text == "while") return parse_while(c, depth);
      if (t.text == "do") return parse_do(c, depth);
      if (t.text == "for") return parse_for(c, depth);
      if (t.text == "switch") return parse_switch(c, depth);
    }
    if (t.text == kBlockOpen) return parse_block(c, depth);
    return parse_wildcard_stmt(c);
  }

  Span span_since(const TokenCursor& c, std::size_t start) const {
    return tokens_span(c.tokens(), start, c.index());
  }

  std::optional<ScanResult> parens(TokenCursor& c) const {
    if (!c.next_is("(")) return std::nullopt;
    auto r = balanced(c, "(", ")");
    if (!r.ok()) return std::nullopt;
    return r;
  }

  std::optional<Body> parse_body(TokenCursor& c, std::size_t depth) {
    if (c.at_end()) return std::nullopt;
    Body body;
    if (c.next_is(kBlockOpen)) {
      if (depth + 1 > options_.max_depth) return std::nullopt;
      auto r = balanced(c, kBlockOpen, kBlockClose);
      if (!r.ok()) return std::nullopt;
      body.stmts = parse_list(r.tokens, depth + 1);
      body.syntax = {*r.open, *r.close};
      return body;
    }
    auto s = parse_statement(c, depth + 1);
    if (!s) return std::nullopt;
    body.stmts.push_back(std::move(*s));
    return body;
  }

  static void append(std::vector<Token>& to, const std::vector<Token>& from) {
    to.insert(to.end(), from.begin(), from.end());
  }

  std::optional<Stmt> parse_if(TokenCursor& c, std::size_t depth) {
    const std::size_t start = c.index();
    Stmt stmt{IfStmt{}, {}, {*any_token(c)}};
    auto& node = std::get<IfStmt>(stmt.node);

    auto cond = parens(c);
    if (!cond) return std::nullopt;
    auto then = parse_body(c, depth);
    if (!then) return std::nullopt;
    node.cond = wildcard_slot(std::move(cond->tokens), *cond->close);
    node.then_body = std::move(then->stmts);
    stmt.syntax.push_back(*cond->open);
    stmt.syntax.push_back(*cond->close);
    append(stmt.syntax, then->syntax);

    while (c.next_is_keyword("else")) {
      const std::size_t arm_start = c.index();
      const Token else_tok = *any_token(c);
      stmt.syntax.push_back(else_tok);
      if (c.next_is_keyword("if")) {
        stmt.syntax.push_back(*any_token(c));
        auto elif_cond = parens(c);
        if (!elif_cond) return std::nullopt;
        auto elif_body = parse_body(c, depth);
        if (!elif_body) return std::nullopt;
        stmt.syntax.push_back(*elif_cond->open);
        stmt.syntax.push_back(*elif_cond->close);
        append(stmt.syntax, elif_body->syntax);
        node.elifs.push_back(ElseIf{wildcard_slot(std::move(elif_cond->tokens), *elif_cond->close),
                                    std::move(elif_body->stmts), span_since(c, arm_start)});
        continue;
      }
      auto else_body = parse_body(c, depth);
      if (!else_body) return std::nullopt;
      append(stmt.syntax, else_body->syntax);
      node.else_body = std::move(else_body->stmts);
      break;
    }
    stmt.span = span_since(c, start);
    return stmt;
  }

  std::optional<Stmt> parse_while(TokenCursor& c, std::size_t depth) {
    const std::size_t start = c.index();
    Stmt stmt{WhileStmt{}, {}, {*any_token(c)}};
    auto cond = parens(c);
    if (!cond) return std::nullopt;
    auto body = parse_body(c, depth);
    if (!body) return std::nullopt;
    stmt.syntax.push_back(*cond->open);
    stmt.syntax.push_back(*cond->close);
    append(stmt.syntax, body->syntax);
    stmt.node = WhileStmt{wildcard_slot(std::move(cond->tokens), *cond->close), std::move(body->stmts)};
    stmt.span = span_since(c, start);
    return stmt;
  }

  std::optional<Stmt> parse_do(TokenCursor& c, std::size_t depth) {
    const std::size_t start = c.index();
    Stmt stmt{DoWhileStmt{}, {}, {*any_token(c)}};
    auto body = parse_body(c, depth);
    if (!body) return std::nullopt;
    append(stmt.syntax, body->syntax);
    if (!c.next_is_keyword("while")) return std::nullopt;
    stmt.syntax.push_back(*any_token(c));
    auto cond = parens(c);
    if (!cond) return std::nullopt;
    stmt.syntax.push_back(*cond->open);
    stmt.syntax.push_back(*cond->close);
    if (c.next_is(profile_.stmt_terminator)) stmt.syntax.push_back(*any_token(c));
    stmt.node = DoWhileStmt{std::move(body->stmts), wildcard_slot(std::move(cond->tokens), *cond->close)};
    stmt.span = span_since(c, start);
    return stmt;
  }

  std::optional<Stmt> parse_for(TokenCursor& c, std::size_t depth) {
    const std::size_t start = c.index();
    Stmt stmt{ForStmt{}, {}, {*any_token(c)}};
    auto header = parens(c);
    if (!header) return std::nullopt;
    const Span header_span = span_since(c, start);
    auto body = parse_body(c, depth);
    if (!body) return std::nullopt;

    ForStmt node;
    node.header = header_span;
    stmt.syntax.push_back(*header->open);

    // Split the header on top-level terminators.
    std::vector<std::size_t> semis;
    std::size_t nest = 0;
    const auto& h = header->tokens;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (profile_.is_open(h[i].text)) {
        ++nest;
      } else if (profile_.is_close(h[i].text)) {
        if (nest > 0) --nest;
      } else if (nest == 0 && h[i].text == profile_.stmt_terminator) {
        semis.push_back(i);
      }
    }
    auto part = [&](std::size_t b, std::size_t e) -> std::optional<Expr> {
      if (b >= e) return std::nullopt;
      return wildcard_slot({h.begin() + static_cast<std::ptrdiff_t>(b), h.begin() + static_cast<std::ptrdiff_t>(e)},
                           h[b]);
    };
    if (semis.size() == 2) {
      node.init = part(0, semis[0]);
      node.cond = part(semis[0] + 1, semis[1]);
      node.update = part(semis[1] + 1, h.size());
      stmt.syntax.push_back(h[semis[0]]);
      stmt.syntax.push_back(h[semis[1]]);
    } else {
      node.header_split = false;
      node.cond = part(0, h.size());
      // Terminators stay inside the unsplit wildcard.
    }
    stmt.syntax.push_back(*header->close);
    append(stmt.syntax, body->syntax);
    node.body = std::move(body->stmts);
    stmt.node = std::move(node);
    stmt.span = span_since(c, start);
    return stmt;
  }

  std::optional<Stmt> parse_switch(TokenCursor& c, std::size_t depth) {
    const std::size_t start = c.index();
    Stmt stmt{SwitchStmt{}, {}, {*any_token(c)}};
    auto scrutinee = parens(c);
    if (!scrutinee) return std::nullopt;
    if (!c.next_is(kBlockOpen) || depth + 1 > options_.max_depth) return std::nullopt;
    auto block = balanced(c, kBlockOpen, kBlockClose);
    if (!block.ok()) return std::nullopt;

    SwitchStmt node;
    node.scrutinee = wildcard_slot(std::move(scrutinee->tokens), *scrutinee->close);
    const auto& body = block.tokens;
    const std::span<const Token> all(body);

    std::vector<std::size_t> labels;
    std::size_t nest = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (profile_.is_open(body[i].text)) {
        ++nest;
      } else if (profile_.is_close(body[i].text)) {
        if (nest > 0) --nest;
      } else if (nest == 0 && (body[i].is_keyword("case") || body[i].is_keyword("default"))) {
        labels.push_back(i);
      }
    }
    const std::size_t first_label = labels.empty() ? body.size() : labels.front();
    node.preamble = parse_list(all.first(first_label), depth + 1);

    for (std::size_t k = 0; k < labels.size(); ++k) {
      const std::size_t at = labels[k];
      const std::size_t next = k + 1 < labels.size() ? labels[k + 1] : body.size();
      std::size_t colon = next;
      nest = 0;
      for (std::size_t j = at + 1; j < next; ++j) {
        if (profile_.is_open(body[j].text)) {
          ++nest;
        } else if (profile_.is_close(body[j].text)) {
          if (nest > 0) --nest;
        } else if (nest == 0 && body[j].text == ":") {
          colon = j;
          break;
        }
      }
      if (colon == next) return std::nullopt;
      CaseArm arm;
      arm.syntax = {body[at], body[colon]};
      if (body[at].text == "case") {
        if (colon == at + 1) return std::nullopt;
        arm.label = wildcard_slot({body.begin() + static_cast<std::ptrdiff_t>(at + 1),
                                   body.begin() + static_cast<std::ptrdiff_t>(colon)},
                                  body[colon]);
      } else if (colon != at + 1) {
        return std::nullopt;
      }
      arm.body = parse_list(all.subspan(colon + 1, next - colon - 1), depth + 1);
      arm.span = tokens_span(all, at, next);
      node.cases.push_back(std::move(arm));
    }

    stmt.syntax.push_back(*scrutinee->open);
    stmt.syntax.push_back(*scrutinee->close);
    stmt.syntax.push_back(*block.open);
    stmt.syntax.push_back(*block.close);
    stmt.node = std::move(node);
    stmt.span = span_since(c, start);
    return stmt;
  }

  std::optional<Stmt> parse_block(TokenCursor& c, std::size_t depth) {
    if (depth + 1 > options_.max_depth) return std::nullopt;
    const std::size_t start = c.index();
    auto r = balanced(c, kBlockOpen, kBlockClose);
    if (!r.ok()) return std::nullopt;
    Stmt stmt{BlockStmt{parse_list(r.tokens, depth + 1)}, span_since(c, start), {*r.open, *r.close}};
    return stmt;
  }

  Stmt parse_wildcard_stmt(TokenCursor& c) {
    const std::size_t start = c.index();
    static constexpr std::string_view kStops[] = {kBlockOpen};
    auto r = skip_to(c, profile_.stmt_terminator, profile_, kStops);
    Stmt stmt;
    stmt.span = span_since(c, start);
    stmt.span.recovered = r.status == ScanStatus::SuffixNotFound;
    Expr expr = r.tokens.empty() ? wildcard_slot({}, *r.close) : wildcard_slot(std::move(r.tokens), c.tokens()[start]);
    expr.span.recovered = stmt.span.recovered;
    stmt.node = WildcardStmt{std::move(expr)};
    if (r.close) stmt.syntax.push_back(*r.close);
    return stmt;
  }

  const LanguageProfile& profile_;
  const ParseOptions& options_;
  std::vector<Token>& skipped_;
};

// ---------------------------------------------------------------------------
// Second step
// ---------------------------------------------------------------------------

class RefinePass {
 public:
  explicit RefinePass(const LanguageProfile& profile) : profile_(profile) {}

  void list(StmtList& stmts) const {
    for (auto& s : stmts) stmt(s);
  }

 private:
  void expr(Expr& e) const { e = parse_expression(e, profile_); }
  void opt(std::optional<Expr>& e) const {
    if (e) expr(*e);
  }

  void stmt(Stmt& s) const {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IfStmt>) {
            expr(n.cond);
            list(n.then_body);
            for (auto& e : n.elifs) {
              expr(e.cond);
              list(e.body);
            }
            if (n.else_body) list(*n.else_body);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            expr(n.cond);
            list(n.body);
          } else if constexpr (std::is_same_v<T, DoWhileStmt>) {
            list(n.body);
            expr(n.cond);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            if (n.header_split) {
              opt(n.init);
              opt(n.cond);
              opt(n.update);
            }
            list(n.body);
          } else if constexpr (std::is_same_v<T, SwitchStmt>) {
            expr(n.scrutinee);
            list(n.preamble);
            for (auto& arm : n.cases) {
              opt(arm.label);
              list(arm.body);
            }
          } else if constexpr (std::is_same_v<T, BlockStmt>) {
            list(n.body);
          } else {
            expr(n.expr);
          }
        },
        s.node);
  }

  const LanguageProfile& profile_;
};

}  // namespace

ParseResult parse_statements(std::span<const Token> tokens, const LanguageProfile& profile,
                             const ParseOptions& options) {
  ParseResult result;
  StatementParser parser(profile, options, result.skipped);
  result.stmts = parser.parse_list(tokens, 0, &result.progress);
  if (options.refine) refine_statements(result.stmts, profile);
  return result;
}

void refine_statements(StmtList& stmts, const LanguageProfile& profile) {
  RefinePass(profile).list(stmts);
}

}  // namespace xcheck
