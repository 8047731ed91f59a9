#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "xcheck/ast.hpp"
#include "xcheck/lexer.hpp"
#include "xcheck/profile.hpp"

namespace xcheck {

struct ParseOptions {
  /// Run the second pass that refines wildcard slots into expressions.
  bool refine = true;
  /// Braces nested deeper than this are not parsed structurally.
  std::size_t max_depth = 256;
};

struct ParseResult {
  StmtList stmts;
  /// Tokens dropped by sliding-window recovery, in the order dropped.
  std::vector<Token> skipped;
  /// Top-level cursor index after each outer-loop iteration.
  std::vector<std::size_t> progress;
};

/// Two-step micro-grammar parse. Never throws on any token input.
ParseResult parse_statements(std::span<const Token> tokens, const LanguageProfile& profile,
                             const ParseOptions& options = {});

inline ParseResult parse_statements(const TokenStream& stream, const LanguageProfile& profile,
                                    const ParseOptions& options = {}) {
  return parse_statements(std::span<const Token>(stream.tokens), profile, options);
}

/// Second pass only: refine every wildcard slot in place.
void refine_statements(StmtList& stmts, const LanguageProfile& profile);

/// Total expression parser. Non-wildcard input is returned unchanged; input
/// that matches no refinement rule comes back as the same wildcard.
Expr parse_expression(const Expr& wildcard, const LanguageProfile& profile);
Expr refine_tokens(std::span<const Token> tokens, const LanguageProfile& profile);

/// Indented tree, one node per line: `<Variant> @<line>:<col> ["tok", ...]`.
std::string dump_ast(const StmtList& stmts);

}  // namespace xcheck
