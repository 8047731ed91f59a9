#include "xcheck/ast.hpp"

namespace xcheck {

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Less: return "<";
    case CompareOp::LessEqual: return "<=";
    case CompareOp::Greater: return ">";
    case CompareOp::GreaterEqual: return ">=";
    case CompareOp::Equal: return "==";
    case CompareOp::NotEqual: return "!=";
  }
  return "?";
}

std::string_view to_string(LogicalOp op) { return op == LogicalOp::And ? "&&" : "||"; }

std::string_view to_string(UpdateOp op) {
  switch (op) {
    case UpdateOp::Increment: return "++";
    case UpdateOp::Decrement: return "--";
    case UpdateOp::AddAssign: return "+=";
    case UpdateOp::SubAssign: return "-=";
  }
  return "?";
}

std::optional<CompareOp> compare_op_from(std::string_view t) {
  if (t == "<") return CompareOp::Less;
  if (t == "<=") return CompareOp::LessEqual;
  if (t == ">") return CompareOp::Greater;
  if (t == ">=") return CompareOp::GreaterEqual;
  if (t == "==") return CompareOp::Equal;
  if (t == "!=") return CompareOp::NotEqual;
  return std::nullopt;
}

std::optional<LogicalOp> logical_op_from(std::string_view t) {
  if (t == "&&") return LogicalOp::And;
  if (t == "||") return LogicalOp::Or;
  return std::nullopt;
}

std::optional<UpdateOp> update_op_from(std::string_view t) {
  if (t == "++") return UpdateOp::Increment;
  if (t == "--") return UpdateOp::Decrement;
  if (t == "+=") return UpdateOp::AddAssign;
  if (t == "-=") return UpdateOp::SubAssign;
  return std::nullopt;
}

std::string_view variant_name(const Expr& e) {
  static constexpr std::string_view kNames[] = {"Wildcard", "Compare", "Logical",
                                                "Not",      "Update",  "Assign",
                                                "Call",     "AccessPath", "Atom"};
  return kNames[e.node.index()];
}

std::string_view variant_name(const Stmt& s) {
  static constexpr std::string_view kNames[] = {"If",     "While", "DoWhile",     "For",
                                                "Switch", "Block", "WildcardStmt"};
  return kNames[s.node.index()];
}

Expr make_wildcard(std::vector<Token> tokens, Span span) {
  return Expr{WildcardExpr{std::move(tokens)}, span, {}, {}};
}

// ---------------------------------------------------------------------------

void append_leaves(const Expr& e, std::vector<Token>& out) {
  out.insert(out.end(), e.open_parens.begin(), e.open_parens.end());
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, WildcardExpr>) {
          out.insert(out.end(), n.tokens.begin(), n.tokens.end());
        } else if constexpr (std::is_same_v<T, CompareExpr> || std::is_same_v<T, LogicalExpr>) {
          append_leaves(*n.lhs, out);
          out.push_back(n.op_token);
          append_leaves(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          out.push_back(n.op_token);
          append_leaves(*n.operand, out);
        } else if constexpr (std::is_same_v<T, UpdateExpr>) {
          if (n.prefix) out.push_back(n.op_token);
          append_leaves(*n.target, out);
          if (!n.prefix) out.push_back(n.op_token);
          if (n.value) append_leaves(**n.value, out);
        } else if constexpr (std::is_same_v<T, AssignExpr>) {
          append_leaves(*n.lhs, out);
          out.push_back(n.op_token);
          append_leaves(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          append_leaves(*n.callee, out);
          out.push_back(n.open);
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i > 0) out.push_back(n.commas[i - 1]);
            append_leaves(n.args[i], out);
          }
          out.push_back(n.close);
        } else if constexpr (std::is_same_v<T, AccessPathExpr>) {
          out.push_back(n.root);
          for (const auto& s : n.steps) {
            out.push_back(s.op);
            out.push_back(s.member);
          }
        } else if constexpr (std::is_same_v<T, AtomExpr>) {
          out.push_back(n.token);
        }
      },
      e.node);
  out.insert(out.end(), e.close_parens.begin(), e.close_parens.end());
}

std::vector<Token> flatten(const Expr& e) {
  std::vector<Token> out;
  append_leaves(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Ordering
// ---------------------------------------------------------------------------

namespace {

std::weak_ordering cmp_text(const Token& a, const Token& b) {
  const int c = a.text.compare(b.text);
  return c < 0 ? std::weak_ordering::less
               : c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent;
}

template <class T, class F>
std::weak_ordering cmp_seq(const std::vector<T>& a, const std::vector<T>& b, F&& cmp) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = cmp(a[i], b[i]); c != 0) return c;
  return a.size() <=> b.size();
}

template <class T, class F>
std::weak_ordering cmp_opt(const std::optional<T>& a, const std::optional<T>& b, F&& cmp) {
  if (a.has_value() != b.has_value()) return a.has_value() <=> b.has_value();
  return a ? cmp(*a, *b) : std::weak_ordering::equivalent;
}

std::weak_ordering cmp_box(const Box<Expr>& a, const Box<Expr>& b) { return compare_expr(*a, *b); }

}  // namespace

std::weak_ordering compare_expr(const Expr& a, const Expr& b) {
  if (auto c = a.node.index() <=> b.node.index(); c != 0) return c;
  return std::visit(
      [&](const auto& x) -> std::weak_ordering {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, WildcardExpr>) {
          return cmp_seq(x.tokens, y.tokens, cmp_text);
        } else if constexpr (std::is_same_v<T, CompareExpr> || std::is_same_v<T, LogicalExpr>) {
          if (auto c = x.op <=> y.op; c != 0) return c;
          if (auto c = compare_expr(*x.lhs, *y.lhs); c != 0) return c;
          return compare_expr(*x.rhs, *y.rhs);
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          return compare_expr(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, UpdateExpr>) {
          if (auto c = x.op <=> y.op; c != 0) return c;
          if (auto c = x.prefix <=> y.prefix; c != 0) return c;
          if (auto c = compare_expr(*x.target, *y.target); c != 0) return c;
          return cmp_opt(x.value, y.value, cmp_box);
        } else if constexpr (std::is_same_v<T, AssignExpr>) {
          if (auto c = compare_expr(*x.lhs, *y.lhs); c != 0) return c;
          return compare_expr(*x.rhs, *y.rhs);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          if (auto c = compare_expr(*x.callee, *y.callee); c != 0) return c;
          return cmp_seq(x.args, y.args, compare_expr);
        } else if constexpr (std::is_same_v<T, AccessPathExpr>) {
          if (auto c = cmp_text(x.root, y.root); c != 0) return c;
          return cmp_seq(x.steps, y.steps, [](const AccessStep& s, const AccessStep& t) {
            if (auto c = cmp_text(s.op, t.op); c != 0) return c;
            return cmp_text(s.member, t.member);
          });
        } else {
          return cmp_text(x.token, y.token);
        }
      },
      a.node);
}

std::weak_ordering compare_stmt_list(const StmtList& a, const StmtList& b) {
  return cmp_seq(a, b, compare_stmt);
}

std::weak_ordering compare_stmt(const Stmt& a, const Stmt& b) {
  if (auto c = a.node.index() <=> b.node.index(); c != 0) return c;
  return std::visit(
      [&](const auto& x) -> std::weak_ordering {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IfStmt>) {
          if (auto c = compare_expr(x.cond, y.cond); c != 0) return c;
          if (auto c = compare_stmt_list(x.then_body, y.then_body); c != 0) return c;
          auto c = cmp_seq(x.elifs, y.elifs, [](const ElseIf& s, const ElseIf& t) {
            if (auto c2 = compare_expr(s.cond, t.cond); c2 != 0) return c2;
            return compare_stmt_list(s.body, t.body);
          });
          if (c != 0) return c;
          return cmp_opt(x.else_body, y.else_body, compare_stmt_list);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          if (auto c = compare_expr(x.cond, y.cond); c != 0) return c;
          return compare_stmt_list(x.body, y.body);
        } else if constexpr (std::is_same_v<T, DoWhileStmt>) {
          if (auto c = compare_stmt_list(x.body, y.body); c != 0) return c;
          return compare_expr(x.cond, y.cond);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          if (auto c = cmp_opt(x.init, y.init, compare_expr); c != 0) return c;
          if (auto c = cmp_opt(x.cond, y.cond, compare_expr); c != 0) return c;
          if (auto c = cmp_opt(x.update, y.update, compare_expr); c != 0) return c;
          return compare_stmt_list(x.body, y.body);
        } else if constexpr (std::is_same_v<T, SwitchStmt>) {
          if (auto c = compare_expr(x.scrutinee, y.scrutinee); c != 0) return c;
          if (auto c = compare_stmt_list(x.preamble, y.preamble); c != 0) return c;
          return cmp_seq(x.cases, y.cases, [](const CaseArm& s, const CaseArm& t) {
            if (auto c = cmp_opt(s.label, t.label, compare_expr); c != 0) return c;
            return compare_stmt_list(s.body, t.body);
          });
        } else if constexpr (std::is_same_v<T, BlockStmt>) {
          return compare_stmt_list(x.body, y.body);
        } else {
          return compare_expr(x.expr, y.expr);
        }
      },
      a.node);
}

// ---------------------------------------------------------------------------

namespace {

void collect_stmt(const Stmt& s, std::vector<Token>& out);

void collect_list(const StmtList& list, std::vector<Token>& out) {
  for (const auto& s : list) collect_stmt(s, out);
}

void collect_opt(const std::optional<Expr>& e, std::vector<Token>& out) {
  if (e) append_leaves(*e, out);
}

void collect_stmt(const Stmt& s, std::vector<Token>& out) {
  out.insert(out.end(), s.syntax.begin(), s.syntax.end());
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IfStmt>) {
          append_leaves(n.cond, out);
          collect_list(n.then_body, out);
          for (const auto& e : n.elifs) {
            append_leaves(e.cond, out);
            collect_list(e.body, out);
          }
          if (n.else_body) collect_list(*n.else_body, out);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          append_leaves(n.cond, out);
          collect_list(n.body, out);
        } else if constexpr (std::is_same_v<T, DoWhileStmt>) {
          collect_list(n.body, out);
          append_leaves(n.cond, out);
        } else if constexpr (std::is_same_v<T, ForStmt>) {
          collect_opt(n.init, out);
          collect_opt(n.cond, out);
          collect_opt(n.update, out);
          collect_list(n.body, out);
        } else if constexpr (std::is_same_v<T, SwitchStmt>) {
          append_leaves(n.scrutinee, out);
          collect_list(n.preamble, out);
          for (const auto& arm : n.cases) {
            out.insert(out.end(), arm.syntax.begin(), arm.syntax.end());
            collect_opt(arm.label, out);
            collect_list(arm.body, out);
          }
        } else if constexpr (std::is_same_v<T, BlockStmt>) {
          collect_list(n.body, out);
        } else {
          append_leaves(n.expr, out);
        }
      },
      s.node);
}

}  // namespace

void collect_tokens(const StmtList& stmts, std::vector<Token>& out) { collect_list(stmts, out); }

std::string token_text(const std::vector<Token>& tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens[i].text;
  }
  return out;
}

}  // namespace xcheck
