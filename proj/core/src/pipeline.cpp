#include "xcheck/pipeline.hpp"

#include "xcheck/checkers.hpp"

namespace xcheck {

AnalysisResult analyze_source(std::string_view source, const LanguageProfile& profile,
                              std::string_view file, const std::set<CheckerId>& enabled,
                              std::optional<LineRange> window) {
  AnalysisResult result;
  TokenStream stream = tokenize(source, profile, std::string(file));
  if (window) stream = restrict_to_lines(stream, window->first, window->last);
  result.lex_issues = stream.issues;
  result.parse = parse_statements(stream, profile);
  result.diagnostics = run_checkers(result.parse.stmts, profile, enabled, file);
  return result;
}

}  // namespace xcheck
