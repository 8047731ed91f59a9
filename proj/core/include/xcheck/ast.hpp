#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "xcheck/token.hpp"

namespace xcheck {

/// Heap-allocated value with deep-copy semantics, for recursive variants.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(implicit)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class CompareOp { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };
enum class LogicalOp { And, Or };
enum class UpdateOp { Increment, Decrement, AddAssign, SubAssign };

std::string_view to_string(CompareOp op);
std::string_view to_string(LogicalOp op);
std::string_view to_string(UpdateOp op);
std::optional<CompareOp> compare_op_from(std::string_view text);
std::optional<LogicalOp> logical_op_from(std::string_view text);
std::optional<UpdateOp> update_op_from(std::string_view text);

struct Expr;

/// Uninterpreted token run. May be empty only for the empty statement.
struct WildcardExpr {
  std::vector<Token> tokens;
};

struct CompareExpr {
  CompareOp op;
  Token op_token;
  Box<Expr> lhs;
  Box<Expr> rhs;
};

struct LogicalExpr {
  LogicalOp op;
  Token op_token;
  Box<Expr> lhs;
  Box<Expr> rhs;
};

struct NotExpr {
  Token op_token;
  Box<Expr> operand;
};

/// `x++`, `--x`, `x += v`, `x -= v`. `value` is present only for the
/// compound forms.
struct UpdateExpr {
  UpdateOp op;
  Token op_token;
  bool prefix = false;
  Box<Expr> target;
  std::optional<Box<Expr>> value;
};

struct AssignExpr {
  Token op_token;
  Box<Expr> lhs;
  Box<Expr> rhs;
};

struct CallExpr {
  Box<Expr> callee;
  Token open;
  std::vector<Expr> args;
  std::vector<Token> commas;
  Token close;
};

struct AccessStep {
  Token op;
  Token member;
};

/// `root (deref member)+`, e.g. `state->work` or `output.length`.
struct AccessPathExpr {
  Token root;
  std::vector<AccessStep> steps;
};

struct AtomExpr {
  Token token;
};

struct Expr {
  using Node = std::variant<WildcardExpr, CompareExpr, LogicalExpr, NotExpr, UpdateExpr,
                            AssignExpr, CallExpr, AccessPathExpr, AtomExpr>;

  Node node;
  Span span;
  /// Fully-covering parentheses stripped during refinement, outermost first.
  std::vector<Token> open_parens;
  std::vector<Token> close_parens;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  T* as() {
    return std::get_if<T>(&node);
  }
};

std::string_view variant_name(const Expr& e);

Expr make_wildcard(std::vector<Token> tokens, Span span);

/// Leaf tokens in source order, including operator tokens and stripped
/// parentheses. For a refined expression this is the original wildcard.
std::vector<Token> flatten(const Expr& e);
void append_leaves(const Expr& e, std::vector<Token>& out);

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt;
using StmtList = std::vector<Stmt>;

struct ElseIf {
  Expr cond;
  StmtList body;
  Span span;
};

struct IfStmt {
  Expr cond;
  StmtList then_body;
  std::vector<ElseIf> elifs;
  std::optional<StmtList> else_body;
};

struct WhileStmt {
  Expr cond;
  StmtList body;
};

struct DoWhileStmt {
  StmtList body;
  Expr cond;
};

struct ForStmt {
  std::optional<Expr> init;
  std::optional<Expr> cond;
  std::optional<Expr> update;
  StmtList body;
  /// From the `for` keyword through the closing parenthesis.
  Span header;
  /// False when the header did not have exactly two top-level terminators;
  /// the whole header is then kept as one unrefined wildcard in `cond`.
  bool header_split = true;
};

struct CaseArm {
  /// nullopt marks `default`.
  std::optional<Expr> label;
  StmtList body;
  Span span;
  /// `case`/`default` keyword and the colon.
  std::vector<Token> syntax;
};

struct SwitchStmt {
  Expr scrutinee;
  /// Statements between `{` and the first label; almost always empty.
  StmtList preamble;
  std::vector<CaseArm> cases;
};

struct BlockStmt {
  StmtList body;
};

struct WildcardStmt {
  Expr expr;
};

struct Stmt {
  using Node = std::variant<IfStmt, WhileStmt, DoWhileStmt, ForStmt, SwitchStmt, BlockStmt,
                            WildcardStmt>;

  Node node;
  Span span;
  /// Tokens consumed as statement syntax: keywords, brackets, terminators.
  std::vector<Token> syntax;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  T* as() {
    return std::get_if<T>(&node);
  }
};

std::string_view variant_name(const Stmt& s);

// ---------------------------------------------------------------------------
// Structural equality and ordering. Tokens compare by text only; positions,
// spans and stripped parentheses are ignored.
// ---------------------------------------------------------------------------

std::weak_ordering compare_expr(const Expr& a, const Expr& b);
std::weak_ordering compare_stmt(const Stmt& a, const Stmt& b);
std::weak_ordering compare_stmt_list(const StmtList& a, const StmtList& b);

inline bool expr_equal(const Expr& a, const Expr& b) { return compare_expr(a, b) == 0; }
inline bool stmt_equal(const Stmt& a, const Stmt& b) { return compare_stmt(a, b) == 0; }
inline bool stmt_list_equal(const StmtList& a, const StmtList& b) {
  return compare_stmt_list(a, b) == 0;
}

/// Every token reachable from the statements: expression leaves plus syntax.
void collect_tokens(const StmtList& stmts, std::vector<Token>& out);

/// Space-joined token texts, e.g. "I0 -> getOperand".
std::string token_text(const std::vector<Token>& tokens, std::string_view sep = " ");

}  // namespace xcheck
