// Dereference-then-check detection.
//
// The walk turns the refined statements into a flat event log:
//   Deref  a path was dereferenced, so it is non-null from here on
//   Test   a path is tested against null in a branch/loop condition
//   Kill   a root was reassigned; everything reached through it is stale
//   Reset  the walk left a top-level compound statement (function boundary)
// Replaying the log against the non-null list yields the findings: a Test of
// a path still on the list means it was checked after being dereferenced.

#include <algorithm>
#include <span>

#include "xcheck/checkers.hpp"

namespace xcheck {
namespace {

class EventCollector {
 public:
  explicit EventCollector(const LanguageProfile& profile) : profile_(profile) {}

  std::vector<NullEvent> take() { return std::move(events_); }

  void top_level(const StmtList& stmts) {
    for (const auto& s : stmts) {
      stmt(s);
      if (!s.is<WildcardStmt>()) events_.push_back({NullEvent::Kind::Reset, {}, s.span});
    }
  }

 private:
  void list(const StmtList& stmts) {
    for (const auto& s : stmts) stmt(s);
  }

  void stmt(const Stmt& s) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IfStmt>) {
            condition(n.cond);
            list(n.then_body);
            for (const auto& e : n.elifs) {
              condition(e.cond);
              list(e.body);
            }
            if (n.else_body) list(*n.else_body);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            condition(n.cond);
            list(n.body);
          } else if constexpr (std::is_same_v<T, DoWhileStmt>) {
            list(n.body);
            value(n.cond);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            if (n.init) value(*n.init);
            if (n.cond) n.header_split ? condition(*n.cond) : value(*n.cond);
            if (n.update) value(*n.update);
            list(n.body);
          } else if constexpr (std::is_same_v<T, SwitchStmt>) {
            value(n.scrutinee);
            list(n.preamble);
            for (const auto& arm : n.cases) {
              if (arm.label) value(*arm.label);
              list(arm.body);
            }
          } else if constexpr (std::is_same_v<T, BlockStmt>) {
            list(n.body);
          } else {
            value(n.expr);
          }
        },
        s.node);
  }

  bool is_root(const Token& t) const {
    return (t.is_identifier() && !profile_.is_null_literal(t.text)) || t.is_keyword("this");
  }

  /// Path tokens: root, op, member, op, member, ...
  static PathKey key_of(std::span<const Token> toks) {
    PathKey k{toks[0].text, {}};
    for (std::size_t i = 1; i + 1 < toks.size(); i += 2) k.steps.emplace_back(toks[i].text, toks[i + 1].text);
    return k;
  }

  /// One Deref per proper prefix that a deref step follows; with
  /// `include_full` the whole path too (it is called through).
  void deref_prefixes(std::span<const Token> toks, bool include_full) {
    const std::size_t steps = (toks.size() - 1) / 2;
    const std::size_t count = include_full ? steps + 1 : steps;
    for (std::size_t k = 0; k < count; ++k) {
      const auto prefix = toks.first(1 + 2 * k);
      events_.push_back({NullEvent::Kind::Deref, key_of(prefix),
                         Span{prefix.front().pos, prefix.back().end(), false}});
    }
  }

  static std::vector<Token> path_tokens(const AccessPathExpr& p) {
    std::vector<Token> toks{p.root};
    for (const auto& s : p.steps) {
      toks.push_back(s.op);
      toks.push_back(s.member);
    }
    return toks;
  }

  void scan_wildcard(const std::vector<Token>& t) {
    std::size_t i = 0;
    while (i < t.size()) {
      if (!is_root(t[i]) || (i > 0 && profile_.is_deref_op(t[i - 1].text))) {
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (j + 1 < t.size() && profile_.is_deref_op(t[j].text) && t[j + 1].is_identifier()) j += 2;
      if (j - i >= 3) {
        const bool called = j < t.size() && t[j].text == "(";
        deref_prefixes(std::span<const Token>(t).subspan(i, j - i), called);
      }
      i = j;
    }
  }

  std::optional<std::string> assigned_root(const Expr& lhs) const {
    if (const auto* a = lhs.as<AtomExpr>(); a && is_root(a->token)) return a->token.text;
    if (const auto* p = lhs.as<AccessPathExpr>()) return p->root.text;
    // Declaration with initializer: `T *name = ...`.
    if (const auto* w = lhs.as<WildcardExpr>(); w && w->tokens.size() >= 2) {
      const auto& t = w->tokens;
      const bool typed = t.front().is_identifier() || t.front().kind == TokenKind::Keyword;
      if (typed && t.back().is_identifier() && !profile_.is_deref_op(t[t.size() - 2].text))
        return t.back().text;
    }
    return std::nullopt;
  }

  void kill(const Expr& lhs, const Span& span) {
    if (auto root = assigned_root(lhs)) events_.push_back({NullEvent::Kind::Kill, PathKey{*root, {}}, span});
  }

  void value(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, WildcardExpr>) {
            scan_wildcard(n.tokens);
          } else if constexpr (std::is_same_v<T, CompareExpr> || std::is_same_v<T, LogicalExpr>) {
            value(*n.lhs);
            value(*n.rhs);
          } else if constexpr (std::is_same_v<T, NotExpr>) {
            value(*n.operand);
          } else if constexpr (std::is_same_v<T, UpdateExpr>) {
            if (n.value) value(**n.value);
            kill(*n.target, e.span);
            value(*n.target);
          } else if constexpr (std::is_same_v<T, AssignExpr>) {
            // Evaluation order: the right side is read before the store.
            value(*n.rhs);
            kill(*n.lhs, e.span);
            value(*n.lhs);
          } else if constexpr (std::is_same_v<T, CallExpr>) {
            if (const auto* p = n.callee->template as<AccessPathExpr>()) {
              deref_prefixes(path_tokens(*p), true);
            } else {
              value(*n.callee);
            }
            for (const auto& a : n.args) value(a);
          } else if constexpr (std::is_same_v<T, AccessPathExpr>) {
            deref_prefixes(path_tokens(n), false);
          }
        },
        e.node);
  }

  /// Path-like operand of a null test, if `e` is one.
  std::optional<PathKey> tested_path(const Expr& e) const {
    if (const auto* a = e.as<AtomExpr>(); a && is_root(a->token)) return PathKey{a->token.text, {}};
    if (const auto* p = e.as<AccessPathExpr>()) return key_of(path_tokens(*p));
    return std::nullopt;
  }

  bool is_null(const Expr& e) const {
    const auto* a = e.as<AtomExpr>();
    return a != nullptr && profile_.is_null_literal(a->token.text);
  }

  void test(const Expr& path_expr, const PathKey& key, const Span& span) {
    value(path_expr);
    events_.push_back({NullEvent::Kind::Test, key, span});
  }

  void condition(const Expr& e) {
    if (const auto* l = e.as<LogicalExpr>()) {
      condition(*l->lhs);
      condition(*l->rhs);
      return;
    }
    if (const auto* n = e.as<NotExpr>()) {
      condition(*n->operand);
      return;
    }
    if (auto key = tested_path(e)) {
      test(e, *key, e.span);
      return;
    }
    if (const auto* c = e.as<CompareExpr>(); c && (c->op == CompareOp::Equal || c->op == CompareOp::NotEqual)) {
      if (auto key = tested_path(*c->lhs); key && is_null(*c->rhs)) {
        test(*c->lhs, *key, e.span);
        return;
      }
      if (auto key = tested_path(*c->rhs); key && is_null(*c->lhs)) {
        test(*c->rhs, *key, e.span);
        return;
      }
    }
    value(e);
  }

  const LanguageProfile& profile_;
  std::vector<NullEvent> events_;
};

}  // namespace

std::string PathKey::str() const {
  std::string out = root;
  for (const auto& [op, member] : steps) out += op + member;
  return out;
}

std::string_view to_string(NullEvent::Kind kind) {
  switch (kind) {
    case NullEvent::Kind::Deref: return "deref";
    case NullEvent::Kind::Test: return "test";
    case NullEvent::Kind::Kill: return "kill";
    case NullEvent::Kind::Reset: return "reset";
  }
  return "?";
}

void NonNullList::insert(const PathKey& path, Position deref_pos) {
  if (!contains(path)) entries_.push_back({path, deref_pos});
}

void NonNullList::kill_root(std::string_view root) {
  std::erase_if(entries_, [&](const NonNullEntry& e) { return e.path.root == root; });
}

std::optional<NonNullEntry> NonNullList::take(const PathKey& path) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const NonNullEntry& e) { return e.path == path; });
  if (it == entries_.end()) return std::nullopt;
  NonNullEntry out = std::move(*it);
  entries_.erase(it);
  return out;
}

bool NonNullList::contains(const PathKey& path) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const NonNullEntry& e) { return e.path == path; });
}

bool NonNullList::has_root(std::string_view root) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const NonNullEntry& e) { return e.path.root == root; });
}

std::vector<NullEvent> collect_null_events(const StmtList& stmts, const LanguageProfile& profile) {
  EventCollector collector(profile);
  collector.top_level(stmts);
  return collector.take();
}

std::vector<NullFinding> replay_null_events(const std::vector<NullEvent>& events) {
  NonNullList nonnull;
  std::vector<NullFinding> findings;
  for (const auto& e : events) {
    switch (e.kind) {
      case NullEvent::Kind::Deref: nonnull.insert(e.path, e.span.start); break;
      case NullEvent::Kind::Kill: nonnull.kill_root(e.path.root); break;
      case NullEvent::Kind::Reset: nonnull.clear(); break;
      case NullEvent::Kind::Test:
        if (auto entry = nonnull.take(e.path)) findings.push_back({e.path, e.span, entry->deref_pos});
        break;
    }
  }
  return findings;
}

std::vector<Diagnostic> check_null_deref(const StmtList& stmts, const LanguageProfile& profile,
                                         std::string_view file) {
  std::vector<Diagnostic> out;
  for (const auto& f : replay_null_events(collect_null_events(stmts, profile))) {
    const auto name = f.path.str();
    out.push_back(Diagnostic{CheckerId::NullDeref,
                             "'" + name + "' checked for null here but dereferenced earlier",
                             std::string(file), f.test.start, f.test.end,
                             RelatedLocation{f.deref_pos, "earlier dereference of '" + name + "'"}});
  }
  return out;
}

}  // namespace xcheck
