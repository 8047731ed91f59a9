#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xcheck/token.hpp"

namespace xcheck {

enum class CheckerId : std::uint8_t { RedundantCondition, RedundantBranch, LoopDirection, NullDeref };

inline constexpr CheckerId kAllCheckers[] = {
    CheckerId::RedundantCondition, CheckerId::RedundantBranch, CheckerId::LoopDirection,
    CheckerId::NullDeref};

std::string_view to_string(CheckerId id);
std::optional<CheckerId> checker_from_string(std::string_view name);
std::set<CheckerId> all_checkers();

struct RelatedLocation {
  Position pos;
  std::string note;

  friend bool operator==(const RelatedLocation&, const RelatedLocation&) = default;
};

struct Diagnostic {
  CheckerId checker = CheckerId::NullDeref;
  std::string message;
  std::string file;
  Position start;
  Position end;
  std::optional<RelatedLocation> related;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Order by file, start offset, checker name, then the remaining fields.
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);

/// Sorts and removes exact duplicates.
void normalize(std::vector<Diagnostic>& diags);

/// `<file>:<line>:<col>: warning [<checker>]: <message>` per finding, with an
/// indented note line when a related location exists. Empty input renders as
/// the empty string.
std::string render_text(const std::vector<Diagnostic>& diags);

/// JSON array of flat objects; see README for the schema.
std::string render_json(const std::vector<Diagnostic>& diags);

class DiagnosticParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of render_json. Offsets are not part of the schema and come back 0.
std::vector<Diagnostic> parse_json_diagnostics(std::string_view text);

}  // namespace xcheck
