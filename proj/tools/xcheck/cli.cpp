#include "xcheck/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "xcheck/parser.hpp"
#include "xcheck/profile.hpp"

namespace fs = std::filesystem;

namespace xcheck::cli {
namespace {

CLI::App& build_app(CLI::App& app, RunConfig& cfg, std::string& checkers, std::string& format,
                    std::string& range) {
  app.add_option("paths", cfg.paths, "Files or directories to analyze");
  app.add_option("--lang", cfg.lang_override, "Force a language profile (c, cpp, java)");
  app.add_option("--checkers", checkers,
                 "Comma-separated subset of redundant-condition, redundant-branch, "
                 "loop-direction, null-deref");
  app.add_option("--format", format, "Output format: text or json");
  app.add_option("--line-range", range, "Analyze only lines A..B of a single file (A:B)");
  app.add_flag("--dump-ast", cfg.dump_ast, "Print the refined tree instead of findings");
  app.add_option("--profile", cfg.profile_file, "Load extra language profiles from a file");
  return app;
}

std::uint32_t parse_line_number(std::string_view s) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v == 0)
    throw UsageError("bad line range: '" + std::string(s) + "' is not a positive line number");
  return v;
}

LineRange parse_range(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) throw UsageError("bad line range: expected A:B");
  LineRange r{parse_line_number(s.substr(0, colon)), parse_line_number(s.substr(colon + 1))};
  if (r.first > r.last) throw UsageError("bad line range: start is after end");
  return r;
}

std::set<CheckerId> parse_checkers(std::string_view s) {
  std::set<CheckerId> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    auto name = s.substr(pos, comma - pos);
    auto id = checker_from_string(name);
    if (!id) throw UsageError("unknown checker '" + std::string(name) + "'");
    out.insert(*id);
    pos = comma + 1;
  }
  return out;
}

struct FileJob {
  std::string path;
  const LanguageProfile* profile = nullptr;
  std::vector<Diagnostic> diagnostics;
  std::string dump;
  std::string error;
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

void process(FileJob& job, const RunConfig& cfg) {
  std::string source;
  if (!read_file(job.path, source)) {
    job.error = "cannot read " + job.path;
    return;
  }
  auto result = analyze_source(source, *job.profile, job.path, cfg.checkers, cfg.line_range);
  if (cfg.dump_ast)
    job.dump = dump_ast(result.parse.stmts);
  else
    job.diagnostics = std::move(result.diagnostics);
}

void run_jobs(std::vector<FileJob>& jobs, const RunConfig& cfg) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
  if (workers <= 1) {
    for (auto& j : jobs) process(j, cfg);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) process(jobs[i], cfg);
    });
}

}  // namespace

std::string usage() {
  RunConfig cfg;
  std::string a, b, c;
  CLI::App app{"Micro-grammar bug finder for C, C++ and Java", "xcheck"};
  build_app(app, cfg, a, b, c);
  return app.help();
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string checkers, format = "text", range;
  CLI::App app{"Micro-grammar bug finder for C, C++ and Java", "xcheck"};
  build_app(app, cfg, checkers, format, range);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cfg.show_help = true;
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (cfg.paths.empty()) throw UsageError("no input paths");
  if (!checkers.empty() || app.count("--checkers") > 0) cfg.checkers = parse_checkers(checkers);
  if (format == "text")
    cfg.format = OutputFormat::Text;
  else if (format == "json")
    cfg.format = OutputFormat::Json;
  else
    throw UsageError("unknown format '" + format + "'");
  if (app.count("--line-range") > 0) {
    cfg.line_range = parse_range(range);
    if (cfg.paths.size() != 1) throw UsageError("bad line range: --line-range needs exactly one file");
  }
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ProfileRegistry registry = ProfileRegistry::with_builtins();
  const LanguageProfile* forced = nullptr;
  try {
    if (cfg.profile_file) {
      if (!fs::is_regular_file(*cfg.profile_file)) {
        err << "xcheck: error: no such profile file: " << *cfg.profile_file << "\n";
        return kExitError;
      }
      for (auto& p : load_profile_file(*cfg.profile_file)) registry.register_profile(std::move(p));
    }
    if (cfg.lang_override) forced = &registry.profile_for(*cfg.lang_override);
  } catch (const ProfileError& e) {
    err << "xcheck: error: " << e.what() << "\n";
    return kExitError;
  }

  std::vector<FileJob> jobs;
  for (const auto& p : cfg.paths) {
    std::error_code ec;
    auto st = fs::status(p, ec);
    if (ec || !fs::exists(st)) {
      err << "xcheck: error: no such file or directory: " << p << "\n";
      return kExitError;
    }
    if (fs::is_directory(st)) {
      if (cfg.line_range) {
        err << "xcheck: error: bad line range: " << p << " is a directory\n";
        return kExitError;
      }
      std::vector<std::string> found;
      for (const auto& e : fs::recursive_directory_iterator(p, ec)) {
        if (!e.is_regular_file()) continue;
        auto s = e.path().generic_string();
        if (registry.find_by_extension(s)) found.push_back(s);
      }
      std::sort(found.begin(), found.end());
      for (auto& s : found) {
        jobs.emplace_back();
        jobs.back().path = std::move(s);
      }
    } else {
      jobs.emplace_back();
      jobs.back().path = p;
    }
  }

  std::vector<FileJob> runnable;
  for (auto& j : jobs) {
    j.profile = forced ? forced : registry.find_by_extension(j.path);
    if (!j.profile) {
      err << "xcheck: note: skipping " << j.path << ": no language profile for its extension\n";
      continue;
    }
    runnable.push_back(std::move(j));
  }

  run_jobs(runnable, cfg);

  std::vector<Diagnostic> all;
  for (auto& j : runnable) {
    if (!j.error.empty()) {
      err << "xcheck: error: " << j.error << "\n";
      return kExitError;
    }
    if (cfg.dump_ast) {
      if (runnable.size() > 1) out << "# " << j.path << "\n";
      out << j.dump;
    }
    all.insert(all.end(), std::make_move_iterator(j.diagnostics.begin()),
               std::make_move_iterator(j.diagnostics.end()));
  }
  if (cfg.dump_ast) return kExitClean;

  normalize(all);
  if (cfg.format == OutputFormat::Json)
    out << render_json(all) << "\n";
  else
    out << render_text(all);
  return all.empty() ? kExitClean : kExitFindings;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    err << "xcheck: error: " << e.what() << "\n" << usage();
    return kExitError;
  }
  if (cfg.show_help) {
    out << usage();
    return kExitClean;
  }
  return run(cfg, out, err);
}

}  // namespace xcheck::cli
