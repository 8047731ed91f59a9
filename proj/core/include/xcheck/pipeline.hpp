#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "xcheck/diagnostic.hpp"
#include "xcheck/lexer.hpp"
#include "xcheck/parser.hpp"
#include "xcheck/profile.hpp"

namespace xcheck {

struct LineRange {
  std::uint32_t first = 1;
  std::uint32_t last = 1;

  friend bool operator==(const LineRange&, const LineRange&) = default;
};

struct AnalysisResult {
  std::vector<Diagnostic> diagnostics;
  std::vector<LexIssue> lex_issues;
  ParseResult parse;
};

/// tokenize -> (window) -> parse_statements -> run_checkers.
AnalysisResult analyze_source(std::string_view source, const LanguageProfile& profile,
                              std::string_view file, const std::set<CheckerId>& enabled,
                              std::optional<LineRange> window = std::nullopt);

}  // namespace xcheck
