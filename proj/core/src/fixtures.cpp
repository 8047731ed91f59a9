#include "xcheck/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace xcheck {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read fixture file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string describe(const ExpectedFinding& f) {
  std::string s = std::string(to_string(f.checker)) + " at line " + std::to_string(f.line);
  if (f.related_line) s += " (related line " + std::to_string(*f.related_line) + ")";
  return s;
}

bool finding_less(const ExpectedFinding& a, const ExpectedFinding& b) {
  return std::tie(a.line, a.checker, a.related_line) < std::tie(b.line, b.checker, b.related_line);
}

}  // namespace

std::vector<ExpectedFinding> expected_from_json(std::string_view golden) {
  std::vector<ExpectedFinding> out;
  for (const auto& d : parse_json_diagnostics(golden)) {
    out.push_back({d.checker, d.start.line,
                   d.related ? std::optional<std::uint32_t>(d.related->pos.line) : std::nullopt});
  }
  return out;
}

std::vector<FixtureCase> load_fixture_cases(const std::string& dir) {
  const std::filesystem::path root(dir);
  const auto manifest = nlohmann::json::parse(read_file(root / "manifest.json"));
  std::vector<FixtureCase> cases;
  for (const auto& entry : manifest) {
    FixtureCase c;
    c.name = entry.at("name").get<std::string>();
    const auto file = entry.at("file").get<std::string>();
    c.file = "fixtures/" + file;
    c.source = read_file(root / file);
    c.profile = entry.at("lang").get<std::string>();
    if (entry.contains("line_range")) {
      const auto& r = entry.at("line_range");
      c.line_range = LineRange{r.at(0).get<std::uint32_t>(), r.at(1).get<std::uint32_t>()};
    }
    c.expected = expected_from_json(read_file(root / entry.at("expected").get<std::string>()));
    cases.push_back(std::move(c));
  }
  return cases;
}

FixtureReport run_fixture(const FixtureCase& fixture, const ProfileRegistry& registry) {
  FixtureReport report;
  report.name = fixture.name;
  const auto& profile = registry.profile_for(fixture.profile);
  report.actual =
      analyze_source(fixture.source, profile, fixture.file, all_checkers(), fixture.line_range).diagnostics;

  std::vector<ExpectedFinding> actual;
  for (const auto& d : report.actual)
    actual.push_back({d.checker, d.start.line,
                      d.related ? std::optional<std::uint32_t>(d.related->pos.line) : std::nullopt});
  auto expected = fixture.expected;
  std::sort(actual.begin(), actual.end(), finding_less);
  std::sort(expected.begin(), expected.end(), finding_less);

  std::vector<ExpectedFinding> missing, unexpected;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing), finding_less);
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(unexpected), finding_less);
  std::ostringstream diff;
  for (const auto& f : missing) diff << "- " << describe(f) << '\n';
  for (const auto& f : unexpected) diff << "+ " << describe(f) << '\n';
  report.diff = diff.str();
  report.passed = missing.empty() && unexpected.empty();
  return report;
}

}  // namespace xcheck
