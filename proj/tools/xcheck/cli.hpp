#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "xcheck/diagnostic.hpp"
#include "xcheck/pipeline.hpp"

namespace xcheck::cli {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::vector<std::string> paths;
  std::optional<std::string> lang_override;
  std::set<CheckerId> checkers = all_checkers();
  OutputFormat format = OutputFormat::Text;
  std::optional<LineRange> line_range;
  bool dump_ast = false;
  std::optional<std::string> profile_file;
  bool show_help = false;
};

/// Bad flags, bad values, or a line range that is reversed or not applied to
/// exactly one path.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitError = 2;

std::string usage();

/// `args` excludes the program name.
RunConfig parse_args(const std::vector<std::string>& args);

/// Findings go to `out`; notes and errors go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage errors to exit status 2.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xcheck::cli
