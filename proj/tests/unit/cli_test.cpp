#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "xcheck/cli.hpp"

using namespace xcheck;
using namespace xcheck::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = main_with_args(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { fs::current_path(XCHECK_SOURCE_DIR); }
};

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("xcheck_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(ParseArgs, FormatJson) {
  auto c = parse_args({"--format", "json", "a.c"});
  EXPECT_EQ(c.format, OutputFormat::Json);
  EXPECT_EQ(c.paths, (std::vector<std::string>{"a.c"}));
  EXPECT_EQ(c.checkers, all_checkers());
}

TEST(ParseArgs, CheckerSubset) {
  auto c = parse_args({"--checkers", "loop-direction", "a.c"});
  EXPECT_EQ(c.checkers, (std::set<CheckerId>{CheckerId::LoopDirection}));
  auto d = parse_args({"--checkers", "null-deref,redundant-branch", "a.c"});
  EXPECT_EQ(d.checkers.size(), 2u);
}

TEST(ParseArgs, ReversedRangeIsBadRange) {
  EXPECT_THROW(parse_args({"--line-range", "516:440", "a.c"}), UsageError);
}

TEST(ParseArgs, RangeForms) {
  auto c = parse_args({"--line-range", "440:516", "a.c"});
  ASSERT_TRUE(c.line_range);
  EXPECT_EQ(*c.line_range, (LineRange{440, 516}));
  EXPECT_THROW(parse_args({"--line-range", "0:5", "a.c"}), UsageError);
  EXPECT_THROW(parse_args({"--line-range", "5", "a.c"}), UsageError);
  EXPECT_THROW(parse_args({"--line-range", "a:b", "a.c"}), UsageError);
  EXPECT_THROW(parse_args({"--line-range", "1:2", "a.c", "b.c"}), UsageError);
}

TEST(ParseArgs, UnknownFlagAndValues) {
  EXPECT_THROW(parse_args({"--bogus", "a.c"}), UsageError);
  EXPECT_THROW(parse_args({"--format", "xml", "a.c"}), UsageError);
  EXPECT_THROW(parse_args({"--checkers", "nope", "a.c"}), UsageError);
  EXPECT_THROW(parse_args({}), UsageError);
}

TEST(ParseArgs, OtherFlags) {
  auto c = parse_args({"--lang", "cpp", "--dump-ast", "--profile", "p.txt", "x", "y"});
  EXPECT_EQ(c.lang_override, "cpp");
  EXPECT_TRUE(c.dump_ast);
  EXPECT_EQ(c.profile_file, "p.txt");
  EXPECT_EQ(c.paths.size(), 2u);
  EXPECT_TRUE(parse_args({"--help"}).show_help);
}

TEST_F(Cli, LlvmWindow) {
  auto r = invoke({"--lang", "cpp", "--line-range", "440:516", "fixtures/InstCombineAddSub.cpp"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out,
            "fixtures/InstCombineAddSub.cpp:490:5: warning [null-deref]: 'I0' checked for null "
            "here but dereferenced earlier\n"
            "  note: earlier dereference of 'I0' at 456:18\n");
  EXPECT_EQ(r.err, "");
}

TEST_F(Cli, ObjectIsClean) {
  auto r = invoke({"fixtures/object.c"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
}

TEST_F(Cli, MissingFile) {
  auto r = invoke({"missing.c"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("missing.c"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({"--bogus"}).code, 2);
  auto r = invoke({"--line-range", "516:440", "fixtures/object.c"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad line range"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST_F(Cli, UnknownLanguage) {
  auto r = invoke({"--lang", "cobol", "fixtures/object.c"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("c, cpp, java"), std::string::npos);
}

TEST_F(Cli, JsonMatchesGoldenFiles) {
  auto r = invoke({"--format", "json", "fixtures/CipherCore.java"});
  EXPECT_EQ(r.code, 1);
  std::ifstream in("fixtures/CipherCore.expected.json");
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(r.out, golden.str());
  EXPECT_EQ(invoke({"--format", "json", "fixtures/object.c"}).out, "[]\n");
}

TEST_F(Cli, JsonRoundTrip) {
  auto r = invoke({"--format", "json", "fixtures"});
  auto parsed = parse_json_diagnostics(r.out);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(render_json(parsed) + "\n", r.out);
}

TEST_F(Cli, DirectoryWalkIsSortedAndFiltered) {
  auto dir = scratch("walk");
  fs::create_directories(dir / "sub");
  write(dir / "b.c", "void f() { a = p->x; if (p) g(); }\n");
  write(dir / "sub" / "a.java", "void m() { n = o.len; if (o == null) g(); }\n");
  write(dir / "README.md", "if (x) y;\n");
  auto r = invoke({dir.string()});
  EXPECT_EQ(r.code, 1);
  auto first = r.out.find("b.c:1:");
  auto second = r.out.find("a.java:1:");
  ASSERT_NE(first, std::string::npos);
  ASSERT_NE(second, std::string::npos);
  EXPECT_LT(first, second);
  EXPECT_EQ(r.out.find("README"), std::string::npos);
  EXPECT_EQ(r.err, "");
}

TEST_F(Cli, ExplicitUnknownExtensionIsSkippedWithNote) {
  auto dir = scratch("skip");
  write(dir / "notes.txt", "x");
  auto r = invoke({(dir / "notes.txt").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("skipping"), std::string::npos);
}

TEST_F(Cli, LangOverrideAppliesToAnyExtension) {
  auto dir = scratch("override");
  write(dir / "code.txt", "void f() { a = p->x; if (p) g(); }\n");
  EXPECT_EQ(invoke({"--lang", "c", (dir / "code.txt").string()}).code, 1);
}

TEST_F(Cli, CheckerSelection) {
  auto dir = scratch("select");
  write(dir / "l.c", "void f() { for (i = 0; i < n; i--) g(); a = p->x; if (p) h(); }\n");
  auto all = invoke({(dir / "l.c").string()});
  EXPECT_NE(all.out.find("[loop-direction]"), std::string::npos);
  EXPECT_NE(all.out.find("[null-deref]"), std::string::npos);
  auto only = invoke({"--checkers", "loop-direction", (dir / "l.c").string()});
  EXPECT_NE(only.out.find("[loop-direction]"), std::string::npos);
  EXPECT_EQ(only.out.find("[null-deref]"), std::string::npos);
  EXPECT_EQ(invoke({"--checkers", "loop-direction", "fixtures/object.c"}).code, 0);
}

TEST_F(Cli, LineRangeOnDirectoryIsBadRange) {
  EXPECT_EQ(invoke({"--line-range", "1:2", "fixtures"}).code, 2);
}

TEST_F(Cli, DumpAst) {
  auto dir = scratch("dump");
  write(dir / "d.c", "if (x >= 3) foo();\n");
  auto r = invoke({"--dump-ast", (dir / "d.c").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 8), "If @1:1\n");
}

TEST_F(Cli, ProfileFileAddsLanguage) {
  auto dir = scratch("profile");
  write(dir / "mini.profile",
        "name = mini\nextensions = .mini\nline_comment = --\nstring = \"\n"
        "operators = ( ) { } ; : = == != < > ++ -- += -= && || ! ~>\n"
        "keywords = if while for\nterminator = ;\nderef_ops = ~>\nnull_literals = nil\n"
        "brackets = ( ) { }\n");
  write(dir / "t.mini", "-- toy\nv = p~>x;\nif (p == nil) g();\n");
  auto r = invoke({"--profile", (dir / "mini.profile").string(), (dir / "t.mini").string()});
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_NE(r.out.find("t.mini:3:5: warning [null-deref]"), std::string::npos) << r.out;
  EXPECT_EQ(invoke({"--profile", (dir / "none").string(), "fixtures/object.c"}).code, 2);
  write(dir / "bad.profile", "name = bad\n");
  EXPECT_EQ(invoke({"--profile", (dir / "bad.profile").string(), "fixtures/object.c"}).code, 2);
}

TEST_F(Cli, DeterministicOutput) {
  auto a = invoke({"--format", "json", "fixtures", "fixtures/object.c"});
  for (int i = 0; i < 5; ++i) EXPECT_EQ(invoke({"--format", "json", "fixtures", "fixtures/object.c"}).out, a.out);
}
