#include <sstream>

#include "xcheck/parser.hpp"

namespace xcheck {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

class Dumper {
 public:
  std::string str() const { return out_.str(); }

  void list(const StmtList& stmts, int indent) {
    for (const auto& s : stmts) stmt(s, indent);
  }

 private:
  void line(int indent, std::string_view name, Position pos) {
    out_ << std::string(static_cast<std::size_t>(indent) * 2, ' ') << name << " @" << pos.line << ':'
         << pos.column;
  }

  void expr(const Expr& e, int indent) {
    line(indent, variant_name(e), e.span.start);
    out_ << " [";
    const auto leaves = flatten(e);
    for (std::size_t i = 0; i < leaves.size(); ++i) out_ << (i ? "," : "") << quoted(leaves[i].text);
    out_ << "]\n";
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, CompareExpr> || std::is_same_v<T, LogicalExpr> ||
                        std::is_same_v<T, AssignExpr>) {
            expr(*n.lhs, indent + 1);
            expr(*n.rhs, indent + 1);
          } else if constexpr (std::is_same_v<T, NotExpr>) {
            expr(*n.operand, indent + 1);
          } else if constexpr (std::is_same_v<T, UpdateExpr>) {
            expr(*n.target, indent + 1);
            if (n.value) expr(**n.value, indent + 1);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            expr(*n.callee, indent + 1);
            for (const auto& a : n.args) expr(a, indent + 1);
          }
        },
        e.node);
  }

  void optional_expr(const std::optional<Expr>& e, Position fallback, int indent) {
    if (e) {
      expr(*e, indent);
    } else {
      line(indent, "Absent", fallback);
      out_ << '\n';
    }
  }

  void stmt(const Stmt& s, int indent) {
    line(indent, variant_name(s), s.span.start);
    if (s.span.recovered) out_ << " (recovered)";
    out_ << '\n';
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IfStmt>) {
            expr(n.cond, indent + 1);
            list(n.then_body, indent + 1);
            for (const auto& e : n.elifs) {
              line(indent, "ElseIf", e.span.start);
              out_ << '\n';
              expr(e.cond, indent + 1);
              list(e.body, indent + 1);
            }
            if (n.else_body) {
              line(indent, "Else", n.else_body->empty() ? s.span.end : n.else_body->front().span.start);
              out_ << '\n';
              list(*n.else_body, indent + 1);
            }
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            expr(n.cond, indent + 1);
            list(n.body, indent + 1);
          } else if constexpr (std::is_same_v<T, DoWhileStmt>) {
            list(n.body, indent + 1);
            expr(n.cond, indent + 1);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            optional_expr(n.init, n.header.start, indent + 1);
            optional_expr(n.cond, n.header.start, indent + 1);
            optional_expr(n.update, n.header.start, indent + 1);
            list(n.body, indent + 1);
          } else if constexpr (std::is_same_v<T, SwitchStmt>) {
            expr(n.scrutinee, indent + 1);
            list(n.preamble, indent + 1);
            for (const auto& arm : n.cases) {
              line(indent + 1, arm.label ? "Case" : "Default", arm.span.start);
              out_ << '\n';
              if (arm.label) expr(*arm.label, indent + 2);
              list(arm.body, indent + 2);
            }
          } else if constexpr (std::is_same_v<T, BlockStmt>) {
            list(n.body, indent + 1);
          } else {
            expr(n.expr, indent + 1);
          }
        },
        s.node);
  }

  std::ostringstream out_;
};

}  // namespace

std::string dump_ast(const StmtList& stmts) {
  Dumper d;
  d.list(stmts, 0);
  return d.str();
}

}  // namespace xcheck
