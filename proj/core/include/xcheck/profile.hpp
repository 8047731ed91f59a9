#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xcheck/token.hpp"

namespace xcheck {

struct StringDelimiter {
  char quote = '"';
  char escape = '\\';
  TokenKind kind = TokenKind::StringLiteral;

  friend bool operator==(const StringDelimiter&, const StringDelimiter&) = default;
};

struct BracketPair {
  std::string open;
  std::string close;

  friend bool operator==(const BracketPair&, const BracketPair&) = default;
};

struct BlockComment {
  std::string open;
  std::string close;

  friend bool operator==(const BlockComment&, const BlockComment&) = default;
};

/// Everything the lexer, parser and checkers need to know about one
/// language. Adding a language means adding one of these.
struct LanguageProfile {
  std::string name;
  std::vector<std::string> file_extensions;
  std::string line_comment;
  BlockComment block_comment;
  std::vector<StringDelimiter> string_delims;
  std::set<std::string> operators;
  std::set<std::string> keywords;
  std::string stmt_terminator = ";";
  /// Member-access operators the null checker treats as dereferences.
  std::vector<std::string> deref_ops;
  std::set<std::string> null_literals;
  std::vector<BracketPair> open_close_pairs;
  /// Skip whole lines starting with '#' (C preprocessor).
  bool preprocessor_lines = false;

  bool is_operator(std::string_view t) const;
  bool is_keyword(std::string_view t) const;
  bool is_deref_op(std::string_view t) const;
  bool is_null_literal(std::string_view t) const;
  bool is_open(std::string_view t) const;
  bool is_close(std::string_view t) const;
  /// Longest operator length; maximal munch never looks further ahead.
  std::size_t max_operator_length() const;

  friend bool operator==(const LanguageProfile&, const LanguageProfile&) = default;
};

class ProfileError : public std::runtime_error {
 public:
  enum class Code { UnknownLanguage, DuplicateName, MalformedProfile };

  ProfileError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// Throws ProfileError(MalformedProfile) naming the first violated rule.
void validate_profile(const LanguageProfile& profile);

LanguageProfile c_profile();
LanguageProfile cpp_profile();
LanguageProfile java_profile();

class ProfileRegistry {
 public:
  ProfileRegistry() = default;

  /// Registry holding the C, C++ and Java profiles.
  static ProfileRegistry with_builtins();

  void register_profile(LanguageProfile profile);

  /// An exact language name wins over a file-extension match.
  const LanguageProfile& profile_for(std::string_view name_or_path) const;

  /// nullptr when no profile claims the path's extension.
  const LanguageProfile* find_by_extension(std::string_view path) const;

  std::vector<std::string> names() const;

 private:
  std::map<std::string, LanguageProfile, std::less<>> profiles_;
  std::map<std::string, std::string, std::less<>> extensions_;
};

/// Parses the key/value profile format; documents are separated by a line
/// containing only `---`.
std::vector<LanguageProfile> parse_profile_documents(std::string_view text);
std::vector<LanguageProfile> load_profile_file(const std::string& path);

}  // namespace xcheck
