#include <fstream>
#include <sstream>

#include "xcheck/profile.hpp"

// Profile file format, one `key = value` per line:
//
//   name          = mini
//   extensions    = .mini .mn
//   line_comment  = //
//   block_comment = /* */
//   string        = "
//   char          = '
//   operators     = + - . == != < <= = ++
//   keywords      = if else while for do switch case default
//   terminator    = ;
//   deref_ops     = .
//   null_literals = nil
//   brackets      = ( ) { } [ ]
//   preprocessor  = false
//
// `string` and `char` take the quote character, optionally followed by an
// escape character (backslash when omitted). Lines whose first non-blank
// character is '#' are comments. A line holding only `---` starts the next
// document.

namespace xcheck {
namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw ProfileError(ProfileError::Code::MalformedProfile,
                     "profile line " + std::to_string(line) + ": " + why);
}

StringDelimiter parse_delim(const std::vector<std::string>& w, TokenKind kind, std::size_t line) {
  if (w.empty() || w.size() > 2 || w[0].size() != 1 || (w.size() == 2 && w[1].size() != 1))
    malformed(line, "expected a quote character and an optional escape character");
  return StringDelimiter{w[0][0], w.size() == 2 ? w[1][0] : '\\', kind};
}

void apply(LanguageProfile& p, const std::string& key, const std::string& value, std::size_t line) {
  const auto w = split_words(value);
  if (key == "name") {
    p.name = value;
  } else if (key == "extensions") {
    p.file_extensions = w;
  } else if (key == "line_comment") {
    p.line_comment = value;
  } else if (key == "block_comment") {
    if (w.size() != 2) malformed(line, "block_comment needs an opening and a closing delimiter");
    p.block_comment = {w[0], w[1]};
  } else if (key == "string") {
    p.string_delims.push_back(parse_delim(w, TokenKind::StringLiteral, line));
  } else if (key == "char") {
    p.string_delims.push_back(parse_delim(w, TokenKind::CharLiteral, line));
  } else if (key == "operators") {
    p.operators.insert(w.begin(), w.end());
  } else if (key == "keywords") {
    p.keywords.insert(w.begin(), w.end());
  } else if (key == "terminator") {
    p.stmt_terminator = value;
  } else if (key == "deref_ops") {
    p.deref_ops = w;
  } else if (key == "null_literals") {
    p.null_literals = {w.begin(), w.end()};
  } else if (key == "brackets") {
    if (w.size() % 2 != 0) malformed(line, "brackets must come in open/close pairs");
    p.open_close_pairs.clear();
    for (std::size_t i = 0; i < w.size(); i += 2) p.open_close_pairs.push_back({w[i], w[i + 1]});
  } else if (key == "preprocessor") {
    if (value != "true" && value != "false") malformed(line, "preprocessor must be true or false");
    p.preprocessor_lines = value == "true";
  } else {
    malformed(line, "unknown key '" + key + "'");
  }
}

}  // namespace

std::vector<LanguageProfile> parse_profile_documents(std::string_view text) {
  std::vector<LanguageProfile> out;
  LanguageProfile current;
  current.stmt_terminator.clear();
  bool touched = false;
  auto finish = [&] {
    if (touched) {
      validate_profile(current);
      out.push_back(std::move(current));
    }
    current = LanguageProfile{};
    current.stmt_terminator.clear();
    touched = false;
  };

  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "---") {
      finish();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) malformed(line_no, "expected 'key = value'");
    apply(current, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
    touched = true;
  }
  finish();
  return out;
}

std::vector<LanguageProfile> load_profile_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ProfileError(ProfileError::Code::MalformedProfile,
                       "cannot read profile file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile_documents(buf.str());
}

}  // namespace xcheck
