#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xcheck/diagnostic.hpp"
#include "xcheck/pipeline.hpp"
#include "xcheck/profile.hpp"

namespace xcheck {

struct ExpectedFinding {
  CheckerId checker;
  std::uint32_t line;
  std::optional<std::uint32_t> related_line;

  friend bool operator==(const ExpectedFinding&, const ExpectedFinding&) = default;
};

struct FixtureCase {
  std::string name;
  /// Path used in reports.
  std::string file;
  std::string source;
  std::string profile;
  std::optional<LineRange> line_range;
  std::vector<ExpectedFinding> expected;
};

struct FixtureReport {
  std::string name;
  bool passed = false;
  std::vector<Diagnostic> actual;
  /// One line per missing (`-`) or unexpected (`+`) finding.
  std::string diff;
};

/// Expected findings from a golden file in the JSON diagnostic schema.
std::vector<ExpectedFinding> expected_from_json(std::string_view golden);

/// Reads `manifest.json` in `dir` plus the sources and golden files it lists.
std::vector<FixtureCase> load_fixture_cases(const std::string& dir);

FixtureReport run_fixture(const FixtureCase& fixture, const ProfileRegistry& registry);

}  // namespace xcheck
