#include "support.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace xcheck::test {

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

std::vector<std::string> texts(const TokenStream& stream) { return texts(stream.tokens); }

ParseResult parse_source(std::string_view source, const LanguageProfile& profile) {
  return parse_statements(tokenize(source, profile), profile);
}

Expr refine_source(std::string_view source, const LanguageProfile& profile) {
  return refine_tokens(tokenize(source, profile).tokens, profile);
}

Token make_token(std::string_view text, const LanguageProfile& profile, std::size_t offset) {
  auto lexed = tokenize(text, profile);
  Token t;
  t.kind = lexed.tokens.size() == 1 ? lexed.tokens[0].kind : TokenKind::Identifier;
  t.text = std::string(text);
  t.pos = Position{1, static_cast<std::uint32_t>(offset + 1), offset};
  return t;
}

namespace {

template <class C>
const auto& pick(Rng& rng, const C& c) {
  std::uniform_int_distribution<std::size_t> d(0, std::size(c) - 1);
  return *std::next(std::begin(c), static_cast<std::ptrdiff_t>(d(rng)));
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

int roll(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<Token> random_tokens(Rng& rng, const LanguageProfile& profile, std::size_t length) {
  static constexpr std::array<std::string_view, 16> kSyntax = {
      "if", "else", "while", "do", "for", "switch", "case", "default",
      "{",  "}",    "(",     ")",  ";",   ":",      "[",    "]"};
  static constexpr std::array<std::string_view, 10> kLeaves = {
      "a", "b", "p", "q", "x", "0", "1", "\"s\"", "f", "this"};
  const std::vector<std::string> ops(profile.operators.begin(), profile.operators.end());
  const std::vector<std::string> kws(profile.keywords.begin(), profile.keywords.end());
  const std::vector<std::string> nulls(profile.null_literals.begin(), profile.null_literals.end());

  std::map<std::string, TokenKind> kinds;
  std::vector<Token> out;
  out.reserve(length);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < length; ++i) {
    std::string text;
    const int r = roll(rng, 0, 99);
    if (r < 30) {
      text = std::string(pick(rng, kSyntax));
    } else if (r < 55) {
      text = pick(rng, ops);
    } else if (r < 62) {
      text = pick(rng, kws);
    } else if (r < 65) {
      text = pick(rng, nulls);
    } else {
      text = std::string(pick(rng, kLeaves));
    }
    // Keywords that are not in this profile (e.g. "this" in C) lex as
    // identifiers, which is what make_token reports.
    auto [it, fresh] = kinds.try_emplace(text, TokenKind::Identifier);
    if (fresh) it->second = make_token(text, profile, 0).kind;
    Token t{it->second, text, Position{1, static_cast<std::uint32_t>(offset + 1), offset}};
    out.push_back(std::move(t));
    offset += text.size() + 1;
  }
  return out;
}

std::vector<std::size_t> conserved_offsets(const ParseResult& result) {
  std::vector<Token> all;
  collect_tokens(result.stmts, all);
  all.insert(all.end(), result.skipped.begin(), result.skipped.end());
  std::vector<std::size_t> offsets;
  offsets.reserve(all.size());
  for (const auto& t : all) offsets.push_back(t.pos.offset);
  std::sort(offsets.begin(), offsets.end());
  return offsets;
}

std::string random_lexer_input(Rng& rng, const LanguageProfile& profile, std::size_t pieces) {
  static constexpr std::array<std::string_view, 8> kIdents = {"a",  "b",   "x1",  "_t",
                                                              "ab", "foo", "Bar", "n"};
  const std::vector<std::string> ops(profile.operators.begin(), profile.operators.end());
  std::string out;
  for (std::size_t i = 0; i < pieces; ++i) {
    std::string piece = chance(rng, 0.6) ? pick(rng, ops) : std::string(pick(rng, kIdents));
    // Keep the soup free of comment openers and preprocessor lines.
    if (out.empty() && piece.front() == '#') piece = "x";
    if (!out.empty() && out.back() == '/' && (piece.front() == '/' || piece.front() == '*'))
      out += ' ';
    if (chance(rng, 0.15)) out += chance(rng, 0.5) ? " " : "\t";
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Null-deref micro-programs
// ---------------------------------------------------------------------------

namespace {

class NullProgram {
 public:
  explicit NullProgram(Rng& rng) : rng_(rng) {}

  std::string program() {
    std::string out;
    const int units = roll(rng_, 1, 3);
    for (int u = 0; u < units; ++u) {
      if (chance(rng_, 0.5)) {
        out += "void fn" + std::to_string(u) + "(int *p) {\n" + stmts(2) + "}\n";
      } else {
        out += stmts(1);
      }
    }
    return out;
  }

 private:
  std::string root() { return std::string(pick(rng_, std::array<std::string_view, 3>{"p", "q", "r"})); }

  std::string path(int min_steps) {
    std::string s = root();
    const int steps = roll(rng_, min_steps, 2);
    for (int i = 0; i < steps; ++i)
      s += "->" + std::string(pick(rng_, std::array<std::string_view, 2>{"f", "g"}));
    return s;
  }

  std::string cond(int depth) {
    const int r = roll(rng_, 0, depth > 0 ? 7 : 4);
    switch (r) {
      case 0: return path(0);
      case 1: return "!" + path(0);
      case 2: return path(0) + " == NULL";
      case 3: return "NULL != " + path(0);
      case 4: return path(1) + " > 0";
      case 5: return cond(depth - 1) + " && " + cond(depth - 1);
      case 6: return cond(depth - 1) + " || " + cond(depth - 1);
      default: return "(" + cond(depth - 1) + ")";
    }
  }

  std::string body(int depth) {
    if (chance(rng_, 0.5)) return "{\n" + stmts(depth) + "}\n";
    return stmt(depth);
  }

  std::string stmts(int depth) {
    std::string s;
    const int n = roll(rng_, 1, 5);
    for (int i = 0; i < n; ++i) s += stmt(depth);
    return s;
  }

  std::string stmt(int depth) {
    const int r = roll(rng_, 0, depth > 0 ? 11 : 7);
    switch (r) {
      case 0: return "use(" + path(1) + ");\n";
      case 1: return "x = " + path(1) + ";\n";
      case 2: return path(1) + "(a);\n";
      case 3: {
        const int v = roll(rng_, 0, 2);
        return root() + " = " + (v == 0 ? std::string("NULL") : v == 1 ? root() : path(1)) + ";\n";
      }
      case 4: return "int *" + root() + " = " + path(0) + ";\n";
      case 5: return root() + "++;\n";
      case 6: return path(1) + " = x;\n";
      case 7: return "return " + path(0) + ";\n";
      case 8: {
        std::string s = "if (" + cond(2) + ") " + body(depth - 1);
        if (chance(rng_, 0.3)) s += "else if (" + cond(1) + ") " + body(depth - 1);
        if (chance(rng_, 0.3)) s += "else " + body(depth - 1);
        return s;
      }
      case 9: return "while (" + cond(2) + ") " + body(depth - 1);
      case 10: return "{\n" + stmts(depth - 1) + "}\n";
      default: return "if (" + cond(1) + ") " + stmt(depth - 1);
    }
  }

  Rng& rng_;
};

}  // namespace

std::string random_null_program(Rng& rng, std::size_t max_tokens) {
  static const LanguageProfile c = c_profile();
  for (;;) {
    std::string src = NullProgram(rng).program();
    if (tokenize(src, c).size() <= max_tokens) return src;
  }
}

std::vector<OracleFinding> brute_force_null_oracle(const std::vector<NullEvent>& events) {
  using K = NullEvent::Kind;
  std::vector<OracleFinding> out;
  for (std::size_t j = 0; j < events.size(); ++j) {
    if (events[j].kind != K::Test) continue;
    const PathKey& p = events[j].path;
    for (std::size_t i = 0; i < j; ++i) {
      if (events[i].kind != K::Deref || !(events[i].path == p)) continue;
      bool blocked = false;
      for (std::size_t k = i + 1; k < j && !blocked; ++k) {
        const auto& e = events[k];
        blocked = e.kind == K::Reset || (e.kind == K::Kill && e.path.root == p.root) ||
                  (e.kind == K::Test && e.path == p);
      }
      if (!blocked) {
        out.emplace_back(events[j].span.start.offset, events[i].span.start.offset, p.str());
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Random trees
// ---------------------------------------------------------------------------

namespace {

class TreeGen {
 public:
  TreeGen(Rng& rng, std::size_t base) : rng_(rng), offset_(base) {}

  Token tok(std::string_view text, TokenKind kind = TokenKind::Identifier) {
    Token t{kind, std::string(text), Position{1, static_cast<std::uint32_t>(offset_ % 1000 + 1), offset_}};
    offset_ += text.size() + 1;
    return t;
  }

  Token leaf() { return tok(pick(rng_, std::array<std::string_view, 2>{"a", "b"})); }

  Expr with_span(Expr::Node node, const Token& first) {
    Expr e{std::move(node), span_of(first), {}, {}};
    return e;
  }

  Expr expr(int depth) {
    const int r = roll(rng_, 0, depth > 0 ? 8 : 2);
    switch (r) {
      case 0: {
        std::vector<Token> ts;
        const int n = roll(rng_, 1, 2);
        for (int i = 0; i < n; ++i)
          ts.push_back(tok(pick(rng_, std::array<std::string_view, 3>{"a", "b", "+"})));
        Span s = span_of(ts.front());
        return make_wildcard(std::move(ts), s);
      }
      case 1: {
        Token t = leaf();
        return with_span(AtomExpr{t}, t);
      }
      case 2: {
        Token root = leaf();
        AccessPathExpr ap{root, {}};
        const int n = roll(rng_, 1, 2);
        for (int i = 0; i < n; ++i)
          ap.steps.push_back(
              {tok(pick(rng_, std::array<std::string_view, 2>{"->", "."}), TokenKind::Operator),
               leaf()});
        return with_span(std::move(ap), root);
      }
      case 3: {
        const auto op = chance(rng_, 0.5) ? CompareOp::Less : CompareOp::Equal;
        Expr lhs = expr(depth - 1);
        Token o = tok(to_string(op), TokenKind::Operator);
        Expr rhs = expr(depth - 1);
        return with_span(CompareExpr{op, o, std::move(lhs), std::move(rhs)}, o);
      }
      case 4: {
        const auto op = chance(rng_, 0.5) ? LogicalOp::And : LogicalOp::Or;
        Expr lhs = expr(depth - 1);
        Token o = tok(to_string(op), TokenKind::Operator);
        Expr rhs = expr(depth - 1);
        return with_span(LogicalExpr{op, o, std::move(lhs), std::move(rhs)}, o);
      }
      case 5: {
        Token o = tok("!", TokenKind::Operator);
        return with_span(NotExpr{o, expr(depth - 1)}, o);
      }
      case 6: {
        const bool compound = chance(rng_, 0.5);
        const auto op = compound ? UpdateOp::AddAssign : UpdateOp::Increment;
        const bool prefix = !compound && chance(rng_, 0.5);
        Expr target = expr(depth - 1);
        Token o = tok(to_string(op), TokenKind::Operator);
        UpdateExpr u{op, o, prefix, std::move(target), std::nullopt};
        if (compound) u.value = Box<Expr>(expr(depth - 1));
        return with_span(std::move(u), o);
      }
      case 7: {
        Expr lhs = expr(depth - 1);
        Token o = tok("=", TokenKind::Operator);
        return with_span(AssignExpr{o, std::move(lhs), expr(depth - 1)}, o);
      }
      default: {
        Expr callee = expr(0);
        Token open = tok("(", TokenKind::Punctuation);
        CallExpr call{std::move(callee), open, {}, {}, open};
        const int n = roll(rng_, 0, 2);
        for (int i = 0; i < n; ++i) {
          if (i > 0) call.commas.push_back(tok(",", TokenKind::Operator));
          call.args.push_back(expr(depth - 1));
        }
        call.close = tok(")", TokenKind::Punctuation);
        return with_span(std::move(call), open);
      }
    }
  }

  StmtList stmts(int depth) {
    StmtList out;
    const int n = roll(rng_, 0, 2);
    for (int i = 0; i < n; ++i) out.push_back(stmt(depth));
    return out;
  }

  Stmt stmt(int depth) {
    Token kw = tok("kw", TokenKind::Keyword);
    Stmt s{WildcardStmt{}, span_of(kw), {kw}};
    const int r = roll(rng_, 0, depth > 0 ? 6 : 0);
    switch (r) {
      case 0: s.node = WildcardStmt{expr(1)}; break;
      case 1: {
        IfStmt n{expr(1), stmts(depth - 1), {}, std::nullopt};
        const int elifs = roll(rng_, 0, 1);
        for (int i = 0; i < elifs; ++i) n.elifs.push_back({expr(1), stmts(depth - 1), {}});
        if (chance(rng_, 0.5)) n.else_body = stmts(depth - 1);
        s.node = std::move(n);
        break;
      }
      case 2: s.node = WhileStmt{expr(1), stmts(depth - 1)}; break;
      case 3: {
        Expr c = expr(1);
        s.node = DoWhileStmt{stmts(depth - 1), std::move(c)};
        break;
      }
      case 4: {
        ForStmt f;
        if (chance(rng_, 0.5)) f.init = expr(1);
        if (chance(rng_, 0.7)) f.cond = expr(1);
        if (chance(rng_, 0.5)) f.update = expr(1);
        f.header_split = chance(rng_, 0.8);
        f.body = stmts(depth - 1);
        s.node = std::move(f);
        break;
      }
      case 5: {
        SwitchStmt sw{expr(1), {}, {}};
        const int arms = roll(rng_, 0, 2);
        for (int i = 0; i < arms; ++i) {
          CaseArm arm;
          if (chance(rng_, 0.8)) arm.label = expr(0);
          arm.body = stmts(depth - 1);
          sw.cases.push_back(std::move(arm));
        }
        s.node = std::move(sw);
        break;
      }
      default: s.node = BlockStmt{stmts(depth - 1)}; break;
    }
    return s;
  }

 private:
  Rng& rng_;
  std::size_t offset_;
};

}  // namespace

Expr random_expr(Rng& rng, int depth, std::size_t base) { return TreeGen(rng, base).expr(depth); }

Stmt random_stmt(Rng& rng, int depth, std::size_t base) { return TreeGen(rng, base).stmt(depth); }

}  // namespace xcheck::test
