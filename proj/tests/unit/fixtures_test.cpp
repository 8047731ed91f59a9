#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "xcheck/checkers.hpp"
#include "xcheck/fixtures.hpp"

using namespace xcheck;

namespace {

const std::string kDir = XCHECK_FIXTURE_DIR;

std::string read(const std::string& name) {
  std::ifstream in(kDir + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string line_of(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  std::string line;
  for (std::size_t i = 0; i < n && std::getline(in, line); ++i) {
  }
  return line;
}

const FixtureCase& find_case(const std::vector<FixtureCase>& cases, std::string_view name) {
  for (const auto& c : cases)
    if (c.name == name) return c;
  throw std::runtime_error("no fixture " + std::string(name));
}

}  // namespace

TEST(Fixtures, ManifestListsThreeCases) {
  auto cases = load_fixture_cases(kDir);
  ASSERT_EQ(cases.size(), 3u);
  const auto& llvm = find_case(cases, "llvm-instcombine-addsub");
  ASSERT_TRUE(llvm.line_range);
  EXPECT_EQ(*llvm.line_range, (LineRange{440, 516}));
  EXPECT_EQ(llvm.file, "fixtures/InstCombineAddSub.cpp");
}

TEST(Fixtures, AllPass) {
  auto registry = ProfileRegistry::with_builtins();
  for (const auto& c : load_fixture_cases(kDir)) {
    auto report = run_fixture(c, registry);
    EXPECT_TRUE(report.passed) << c.name << "\n" << report.diff;
  }
}

TEST(Fixtures, ExpectedFindings) {
  auto cases = load_fixture_cases(kDir);
  EXPECT_EQ(find_case(cases, "openjdk-ciphercore").expected,
            (std::vector<ExpectedFinding>{{CheckerId::NullDeref, 888, 886}}));
  EXPECT_EQ(find_case(cases, "llvm-instcombine-addsub").expected,
            (std::vector<ExpectedFinding>{{CheckerId::NullDeref, 490, 456}}));
  EXPECT_TRUE(find_case(cases, "linux-fscache-object").expected.empty());
}

TEST(Fixtures, LineFidelity) {
  const auto obj = read("object.c");
  EXPECT_NE(line_of(obj, 233).find("new_state = state->work(object, event);"), std::string::npos);
  EXPECT_NE(line_of(obj, 248).find("object->state = state = new_state;"), std::string::npos);
  EXPECT_NE(line_of(obj, 250).find("if (state->work) {"), std::string::npos);

  const auto llvm = read("InstCombineAddSub.cpp");
  EXPECT_NE(line_of(llvm, 456).find("Value *Opnd0_0 = I0->getOperand(0);"), std::string::npos);
  EXPECT_NE(line_of(llvm, 455).find("InstCombineAddSub.cpp"), std::string::npos);
  EXPECT_EQ(line_of(llvm, 489), "// ...");
  EXPECT_NE(line_of(llvm, 490).find("if (I0) Flags &= I->getFastMathFlags();"),
            std::string::npos);

  const auto java = read("CipherCore.java");
  EXPECT_NE(line_of(java, 885).find("CipherCore.java"), std::string::npos);
  EXPECT_NE(line_of(java, 886).find("int outputCapacity = output.length - outputOffset;"),
            std::string::npos);
  EXPECT_NE(line_of(java, 888).find("if ((output == null) || (outputCapacity < minOutSize)) {"),
            std::string::npos);
}

TEST(Fixtures, MutationFlipsObjectCase) {
  auto cases = load_fixture_cases(kDir);
  auto c = find_case(cases, "linux-fscache-object");
  std::istringstream in(c.source);
  std::string mutated, line;
  for (std::size_t n = 1; std::getline(in, line); ++n) mutated += (n == 248 ? "" : line) + "\n";
  c.source = mutated;
  c.expected = {{CheckerId::NullDeref, 250, 233}};
  auto report = run_fixture(c, ProfileRegistry::with_builtins());
  EXPECT_TRUE(report.passed) << report.diff;
}

TEST(Fixtures, DiffShowsMissingAndUnexpected) {
  auto cases = load_fixture_cases(kDir);
  auto c = find_case(cases, "linux-fscache-object");
  c.expected = {{CheckerId::NullDeref, 1, std::nullopt}};
  auto report = run_fixture(c, ProfileRegistry::with_builtins());
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.diff.substr(0, 1), "-");
}

TEST(Fixtures, WindowMatchesFullFilePositions) {
  auto cases = load_fixture_cases(kDir);
  const auto& c = find_case(cases, "llvm-instcombine-addsub");
  auto p = cpp_profile();
  auto full = analyze_source(c.source, p, c.file, {CheckerId::NullDeref});
  auto window = analyze_source(c.source, p, c.file, {CheckerId::NullDeref}, c.line_range);
  ASSERT_EQ(window.diagnostics.size(), 1u);
  for (const auto& d : window.diagnostics) {
    EXPECT_GE(d.start.line, 440u);
    EXPECT_LE(d.start.line, 516u);
  }
  EXPECT_EQ(full.diagnostics, window.diagnostics);
}

TEST(Fixtures, LoopDirectionOnlyOnLlvmIsClean) {
  auto cases = load_fixture_cases(kDir);
  const auto& c = find_case(cases, "llvm-instcombine-addsub");
  auto r = analyze_source(c.source, cpp_profile(), c.file, {CheckerId::LoopDirection}, c.line_range);
  EXPECT_TRUE(r.diagnostics.empty());
}
