#include "xcheck/checkers.hpp"

#include <functional>

namespace xcheck {
namespace {

/// Pre-order visit of every statement, including nested bodies.
void for_each_stmt(const StmtList& stmts, const std::function<void(const Stmt&)>& fn) {
  for (const auto& s : stmts) {
    fn(s);
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IfStmt>) {
            for_each_stmt(n.then_body, fn);
            for (const auto& e : n.elifs) for_each_stmt(e.body, fn);
            if (n.else_body) for_each_stmt(*n.else_body, fn);
          } else if constexpr (std::is_same_v<T, SwitchStmt>) {
            for_each_stmt(n.preamble, fn);
            for (const auto& arm : n.cases) for_each_stmt(arm.body, fn);
          } else if constexpr (std::is_same_v<T, WildcardStmt>) {
            // leaf
          } else {
            for_each_stmt(n.body, fn);
          }
        },
        s.node);
  }
}

Diagnostic make(CheckerId id, std::string message, std::string_view file, const Span& span,
                std::optional<RelatedLocation> related = std::nullopt) {
  return Diagnostic{id, std::move(message), std::string(file), span.start, span.end, std::move(related)};
}

Span list_span(const StmtList& body) { return Span{body.front().span.start, body.back().span.end, false}; }

std::string line_of(const Position& p) { return std::to_string(p.line); }

}  // namespace

std::vector<Diagnostic> check_redundant_conditions(const StmtList& stmts, std::string_view file) {
  std::vector<Diagnostic> out;
  for_each_stmt(stmts, [&](const Stmt& s) {
    const auto* node = s.as<IfStmt>();
    if (node == nullptr) return;

    std::vector<const Expr*> conds{&node->cond};
    std::vector<const StmtList*> bodies{&node->then_body};
    for (const auto& e : node->elifs) {
      conds.push_back(&e.cond);
      bodies.push_back(&e.body);
    }
    if (node->else_body) bodies.push_back(&*node->else_body);

    for (std::size_t k = 1; k < conds.size(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        if (expr_equal(*conds[i], *conds[k])) {
          out.push_back(make(CheckerId::RedundantCondition,
                             "condition repeats the one at line " + line_of(conds[i]->span.start), file,
                             conds[k]->span, RelatedLocation{conds[i]->span.start, "first condition"}));
          break;
        }
      }
    }
    for (std::size_t k = 1; k < bodies.size(); ++k) {
      if (bodies[k]->empty()) continue;
      for (std::size_t i = 0; i < k; ++i) {
        if (!bodies[i]->empty() && stmt_list_equal(*bodies[i], *bodies[k])) {
          out.push_back(make(CheckerId::RedundantCondition,
                             "branch body repeats the branch at line " +
                                 line_of(bodies[i]->front().span.start),
                             file, list_span(*bodies[k]),
                             RelatedLocation{bodies[i]->front().span.start, "first branch"}));
          break;
        }
      }
    }
  });
  return out;
}

std::vector<Diagnostic> check_redundant_branches(const StmtList& stmts, std::string_view file) {
  std::vector<Diagnostic> out;
  for_each_stmt(stmts, [&](const Stmt& s) {
    const auto* node = s.as<SwitchStmt>();
    if (node == nullptr) return;
    const auto& arms = node->cases;
    for (std::size_t k = 1; k < arms.size(); ++k) {
      if (arms[k].label) {
        for (std::size_t i = 0; i < k; ++i) {
          if (arms[i].label && expr_equal(*arms[i].label, *arms[k].label)) {
            out.push_back(make(CheckerId::RedundantBranch,
                               "duplicate case label; first used at line " + line_of(arms[i].span.start),
                               file, arms[k].label->span,
                               RelatedLocation{arms[i].span.start, "first use of the label"}));
            break;
          }
        }
      }
      if (arms[k].body.empty()) continue;
      for (std::size_t i = 0; i < k; ++i) {
        if (!arms[i].body.empty() && stmt_list_equal(arms[i].body, arms[k].body)) {
          out.push_back(make(CheckerId::RedundantBranch,
                             "case body repeats the case at line " + line_of(arms[i].span.start), file,
                             arms[k].span, RelatedLocation{arms[i].span.start, "first case with this body"}));
          break;
        }
      }
    }
  });
  return out;
}

bool loop_direction_conflicts(CompareOp cond, UpdateOp update) {
  const bool counts_down = update == UpdateOp::Decrement || update == UpdateOp::SubAssign;
  const bool counts_up = update == UpdateOp::Increment || update == UpdateOp::AddAssign;
  switch (cond) {
    case CompareOp::Less:
    case CompareOp::LessEqual: return counts_down;
    case CompareOp::Greater:
    case CompareOp::GreaterEqual: return counts_up;
    default: return false;
  }
}

std::vector<Diagnostic> check_loop_direction(const StmtList& stmts, std::string_view file) {
  std::vector<Diagnostic> out;
  for_each_stmt(stmts, [&](const Stmt& s) {
    const auto* node = s.as<ForStmt>();
    if (node == nullptr || !node->cond || !node->update) return;
    const auto* cmp = node->cond->as<CompareExpr>();
    const auto* upd = node->update->as<UpdateExpr>();
    if (cmp == nullptr || upd == nullptr) return;

    std::string var;
    if (const auto* a = upd->target->as<AtomExpr>(); a && a->token.is_identifier()) {
      var = a->token.text;
    } else if (const auto* p = upd->target->as<AccessPathExpr>()) {
      var = p->root.text;
    } else {
      return;
    }
    bool mentioned = false;
    for (const auto& t : flatten(*node->cond)) mentioned = mentioned || t.text == var;
    if (!mentioned || !loop_direction_conflicts(cmp->op, upd->op)) return;

    out.push_back(make(CheckerId::LoopDirection,
                       "loop condition uses '" + std::string(to_string(cmp->op)) + "' but '" + var +
                           "' is updated with '" + std::string(to_string(upd->op)) + "'",
                       file, node->header));
  });
  return out;
}

std::vector<Diagnostic> run_checkers(const StmtList& stmts, const LanguageProfile& profile,
                                     const std::set<CheckerId>& enabled, std::string_view file) {
  std::vector<Diagnostic> out;
  auto add = [&](std::vector<Diagnostic> d) { out.insert(out.end(), d.begin(), d.end()); };
  for (CheckerId id : enabled) {
    switch (id) {
      case CheckerId::RedundantCondition: add(check_redundant_conditions(stmts, file)); break;
      case CheckerId::RedundantBranch: add(check_redundant_branches(stmts, file)); break;
      case CheckerId::LoopDirection: add(check_loop_direction(stmts, file)); break;
      case CheckerId::NullDeref: add(check_null_deref(stmts, profile, file)); break;
    }
  }
  normalize(out);
  return out;
}

}  // namespace xcheck
