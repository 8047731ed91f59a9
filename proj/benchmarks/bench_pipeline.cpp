#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "xcheck/checkers.hpp"
#include "xcheck/pipeline.hpp"

using namespace xcheck;

namespace {

std::string read_fixture(const char* name) {
  std::ifstream in(std::string(XCHECK_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A C translation unit of `functions` small functions mixing every construct
// the checkers look at.
std::string synthetic_c(int functions) {
  std::ostringstream out;
  out << "#include <stdio.h>\n";
  for (int i = 0; i < functions; ++i) {
    out << "static int f" << i << "(struct node *p, int n) {\n"
        << "  int total = p->value; /* read */\n"
        << "  for (int i = 0; i < n; i++) {\n"
        << "    if (p->next == NULL) break;\n"
        << "    else if (p->kind == 2) total += g(p->next, i);\n"
        << "    else total -= 1;\n"
        << "  }\n"
        << "  switch (n) { case 0: h(); break; case 1: k(); break; default: break; }\n"
        << "  while (p && p->next) p = p->next;\n"
        << "  return total;\n"
        << "}\n";
  }
  return out.str();
}

const std::string& large_source() {
  static const std::string s = synthetic_c(500);
  return s;
}

void BM_Tokenize(benchmark::State& state) {
  const auto profile = c_profile();
  const auto& src = large_source();
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(src, profile));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_Tokenize);

void BM_ParseStructural(benchmark::State& state) {
  const auto profile = c_profile();
  const auto stream = tokenize(large_source(), profile);
  for (auto _ : state) benchmark::DoNotOptimize(parse_statements(stream, profile, ParseOptions{false}));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * stream.size()));
}
BENCHMARK(BM_ParseStructural);

void BM_ParseRefined(benchmark::State& state) {
  const auto profile = c_profile();
  const auto stream = tokenize(large_source(), profile);
  for (auto _ : state) benchmark::DoNotOptimize(parse_statements(stream, profile));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * stream.size()));
}
BENCHMARK(BM_ParseRefined);

void BM_Checker(benchmark::State& state) {
  const auto profile = c_profile();
  const auto stmts = parse_statements(tokenize(large_source(), profile), profile).stmts;
  const auto id = static_cast<CheckerId>(state.range(0));
  state.SetLabel(std::string(to_string(id)));
  for (auto _ : state) benchmark::DoNotOptimize(run_checkers(stmts, profile, {id}));
}
BENCHMARK(BM_Checker)->DenseRange(0, 3);

void BM_Fixture(benchmark::State& state) {
  struct Case {
    const char* file;
    LanguageProfile profile;
  };
  static const Case cases[] = {{"CipherCore.java", java_profile()},
                               {"InstCombineAddSub.cpp", cpp_profile()},
                               {"object.c", c_profile()}};
  const auto& c = cases[state.range(0)];
  const auto src = read_fixture(c.file);
  state.SetLabel(c.file);
  for (auto _ : state)
    benchmark::DoNotOptimize(analyze_source(src, c.profile, c.file, all_checkers()));
}
BENCHMARK(BM_Fixture)->DenseRange(0, 2);

}  // namespace
BENCHMARK_MAIN();
