#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "xcheck/ast.hpp"
#include "xcheck/checkers.hpp"
#include "xcheck/lexer.hpp"
#include "xcheck/parser.hpp"
#include "xcheck/profile.hpp"

namespace xcheck::test {

using Rng = std::mt19937_64;

std::vector<std::string> texts(const std::vector<Token>& tokens);
std::vector<std::string> texts(const TokenStream& stream);

ParseResult parse_source(std::string_view source, const LanguageProfile& profile);
Expr refine_source(std::string_view source, const LanguageProfile& profile);

/// A token as the profile's lexer would classify `text`, placed at `offset`
/// on line 1.
Token make_token(std::string_view text, const LanguageProfile& profile, std::size_t offset);

/// Random token sequence drawn from the profile's alphabet, biased toward
/// statement syntax so the structural parser gets exercised.
std::vector<Token> random_tokens(Rng& rng, const LanguageProfile& profile, std::size_t length);

/// Offsets of every token reachable from the parse (tree leaves, statement
/// syntax, sliding-window drops), sorted.
std::vector<std::size_t> conserved_offsets(const ParseResult& result);

/// Random operator/identifier soup for the lexer; no comments, no strings,
/// no preprocessor lines.
std::string random_lexer_input(Rng& rng, const LanguageProfile& profile, std::size_t pieces);

/// Random C program built from dereferences, null tests, assignments and
/// control flow over a handful of pointer names. At most `max_tokens` tokens.
std::string random_null_program(Rng& rng, std::size_t max_tokens);

/// (test start offset, deref offset, path) by direct enumeration over the
/// event log: a test j of p reports iff some deref i < j of p has no kill of
/// root(p), no reset and no test of p strictly between; the related position
/// is the earliest such i.
using OracleFinding = std::tuple<std::size_t, std::size_t, std::string>;
std::vector<OracleFinding> brute_force_null_oracle(const std::vector<NullEvent>& events);

/// Random trees over a tiny alphabet so that equal pairs are common.
/// `base` shifts every generated position; the same seed with a different
/// base gives a structurally equal tree at other positions.
Expr random_expr(Rng& rng, int depth, std::size_t base = 0);
Stmt random_stmt(Rng& rng, int depth, std::size_t base = 0);

}  // namespace xcheck::test
