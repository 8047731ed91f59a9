// Second parsing step: refine wildcard token runs into the small expression
// grammar the checkers pattern-match on. Loosest rule first:
//
//   Assign / compound update   first top-level '=', '+=', '-='
//   Logical                    last top-level '||', else last '&&'
//   Compare                    exactly one top-level comparison operator
//   Not                        leading '!'
//   Update                     trailing or leading '++' / '--'
//   Call                       path '(' args ')' covering everything
//   AccessPath                 ident (deref ident)+
//   Atom                       single token
//
// Fully covering parentheses are stripped first. Anything else stays a
// wildcard; refinement never fails.

#include <algorithm>

#include "xcheck/parser.hpp"

namespace xcheck {
namespace {

constexpr int kMaxRefineDepth = 200;

Span span_of(std::span<const Token> toks) {
  if (toks.empty()) return {};
  return Span{toks.front().pos, toks.back().end(), false};
}

bool is_assignment_family(const Token& t) {
  if (t.kind != TokenKind::Operator) return false;
  const auto& s = t.text;
  if (s == "=") return true;
  if (s.size() < 2 || s.back() != '=') return false;
  return s != "==" && s != "!=" && s != "<=" && s != ">=";
}

class Refiner {
 public:
  explicit Refiner(const LanguageProfile& profile) : profile_(profile) {}

  Expr refine(std::span<const Token> toks, int depth) const {
    if (toks.empty()) return make_wildcard({}, {});
    const Span whole = span_of(toks);
    if (depth > kMaxRefineDepth) return wildcard(toks);

    std::vector<Token> opens, closes;
    while (toks.size() > 2 && toks.front().text == "(" && matching_close(toks, 0) == toks.size() - 1) {
      opens.push_back(toks.front());
      closes.insert(closes.begin(), toks.back());
      toks = toks.subspan(1, toks.size() - 2);
    }
    Expr e = refine_core(toks, depth);
    if (!opens.empty()) {
      e.open_parens = std::move(opens);
      e.close_parens = std::move(closes);
      e.span = whole;
    }
    return e;
  }

 private:
  Expr wildcard(std::span<const Token> toks) const {
    return make_wildcard({toks.begin(), toks.end()}, span_of(toks));
  }

  Expr node(Expr::Node n, std::span<const Token> toks) const {
    return Expr{std::move(n), span_of(toks), {}, {}};
  }

  /// Index of the bracket closing the one at `open`, or npos.
  std::size_t matching_close(std::span<const Token> toks, std::size_t open) const {
    std::size_t depth = 0;
    for (std::size_t i = open; i < toks.size(); ++i) {
      if (profile_.is_open(toks[i].text)) {
        ++depth;
      } else if (profile_.is_close(toks[i].text)) {
        if (depth == 0) return std::string_view::npos;
        if (--depth == 0) return i;
      }
    }
    return std::string_view::npos;
  }

  /// top[i] is true when toks[i] sits at bracket depth zero (brackets
  /// themselves are never top-level).
  std::vector<bool> top_level(std::span<const Token> toks) const {
    std::vector<bool> top(toks.size(), false);
    std::size_t depth = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (profile_.is_open(toks[i].text)) {
        ++depth;
      } else if (profile_.is_close(toks[i].text)) {
        if (depth > 0) --depth;
      } else {
        top[i] = depth == 0;
      }
    }
    return top;
  }

  bool is_root(const Token& t) const { return t.is_identifier() || t.is_keyword("this"); }

  /// End of the `root (deref member)*` run starting at 0.
  std::size_t path_run(std::span<const Token> toks) const {
    if (toks.empty() || !is_root(toks[0])) return 0;
    std::size_t j = 1;
    while (j + 1 < toks.size() && profile_.is_deref_op(toks[j].text) && toks[j + 1].is_identifier())
      j += 2;
    return j;
  }

  Expr path_expr(std::span<const Token> toks) const {
    if (toks.size() == 1) return node(AtomExpr{toks[0]}, toks);
    AccessPathExpr path{toks[0], {}};
    for (std::size_t i = 1; i + 1 < toks.size(); i += 2) path.steps.push_back({toks[i], toks[i + 1]});
    return node(std::move(path), toks);
  }

  Expr refine_core(std::span<const Token> toks, int depth) const {
    const std::size_t n = toks.size();
    if (n == 1) return node(AtomExpr{toks[0]}, toks);
    const auto top = top_level(toks);
    auto first_top = [&](auto pred) -> std::size_t {
      for (std::size_t i = 0; i < n; ++i)
        if (top[i] && pred(toks[i])) return i;
      return n;
    };
    auto last_top = [&](std::string_view text) -> std::size_t {
      for (std::size_t i = n; i-- > 0;)
        if (top[i] && toks[i].text == text) return i;
      return n;
    };
    auto binary_ok = [&](std::size_t i) { return i > 0 && i + 1 < n; };

    if (first_top([](const Token& t) { return t.text == ","; }) != n) return wildcard(toks);

    if (const auto i = first_top(is_assignment_family); i != n) {
      if (!binary_ok(i)) return wildcard(toks);
      auto lhs = refine(toks.first(i), depth + 1);
      auto rhs = refine(toks.subspan(i + 1), depth + 1);
      if (toks[i].text == "=") return node(AssignExpr{toks[i], std::move(lhs), std::move(rhs)}, toks);
      if (auto op = update_op_from(toks[i].text); op && (*op == UpdateOp::AddAssign || *op == UpdateOp::SubAssign))
        return node(UpdateExpr{*op, toks[i], false, std::move(lhs), Box<Expr>(std::move(rhs))}, toks);
      return wildcard(toks);
    }

    if (first_top([](const Token& t) { return t.text == "?"; }) != n) return wildcard(toks);

    for (std::string_view op_text : {"||", "&&"}) {
      if (const auto i = last_top(op_text); i != n) {
        if (!binary_ok(i)) return wildcard(toks);
        return node(LogicalExpr{*logical_op_from(op_text), toks[i], refine(toks.first(i), depth + 1),
                                refine(toks.subspan(i + 1), depth + 1)},
                    toks);
      }
    }

    std::size_t cmp_count = 0, cmp_at = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (top[i] && toks[i].kind == TokenKind::Operator && compare_op_from(toks[i].text)) {
        ++cmp_count;
        cmp_at = i;
      }
    }
    if (cmp_count > 0) {
      if (cmp_count > 1 || !binary_ok(cmp_at)) return wildcard(toks);
      return node(CompareExpr{*compare_op_from(toks[cmp_at].text), toks[cmp_at],
                              refine(toks.first(cmp_at), depth + 1),
                              refine(toks.subspan(cmp_at + 1), depth + 1)},
                  toks);
    }

    if (toks[0].text == "!" && toks[0].kind == TokenKind::Operator)
      return node(NotExpr{toks[0], refine(toks.subspan(1), depth + 1)}, toks);

    if (const auto& last = toks[n - 1]; last.text == "++" || last.text == "--")
      return node(UpdateExpr{*update_op_from(last.text), last, false, refine(toks.first(n - 1), depth + 1),
                             std::nullopt},
                  toks);
    if (toks[0].text == "++" || toks[0].text == "--")
      return node(UpdateExpr{*update_op_from(toks[0].text), toks[0], true, refine(toks.subspan(1), depth + 1),
                             std::nullopt},
                  toks);

    const std::size_t run = path_run(toks);
    if (run > 0 && run < n && toks[run].text == "(" && matching_close(toks, run) == n - 1) {
      if (auto call = refine_call(toks, run, depth)) return std::move(*call);
      return wildcard(toks);
    }
    if (run == n) return path_expr(toks);
    return wildcard(toks);
  }

  std::optional<Expr> refine_call(std::span<const Token> toks, std::size_t open, int depth) const {
    const std::size_t n = toks.size();
    const auto inner = toks.subspan(open + 1, n - open - 2);
    CallExpr call{path_expr(toks.first(open)), toks[open], {}, {}, toks[n - 1]};
    if (!inner.empty()) {
      const auto top = top_level(inner);
      std::size_t begin = 0;
      for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i < inner.size() && !(top[i] && inner[i].text == ",")) continue;
        if (i == begin) return std::nullopt;
        call.args.push_back(refine(inner.subspan(begin, i - begin), depth + 1));
        if (i < inner.size()) call.commas.push_back(inner[i]);
        begin = i + 1;
      }
    }
    return node(std::move(call), toks);
  }

  const LanguageProfile& profile_;
};

}  // namespace

Expr refine_tokens(std::span<const Token> tokens, const LanguageProfile& profile) {
  return Refiner(profile).refine(tokens, 0);
}

Expr parse_expression(const Expr& wildcard, const LanguageProfile& profile) {
  const auto* w = wildcard.as<WildcardExpr>();
  if (w == nullptr || w->tokens.empty()) return wildcard;
  Expr refined = refine_tokens(w->tokens, profile);
  refined.span.recovered = wildcard.span.recovered;
  return refined;
}

}  // namespace xcheck
