#include "xcheck/profile.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

namespace xcheck {
namespace {

std::set<std::string> words(std::string_view text) {
  std::set<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) out.insert(w);
  return out;
}

std::vector<BracketPair> c_family_brackets() { return {{"(", ")"}, {"{", "}"}, {"[", "]"}}; }

std::vector<StringDelimiter> c_family_strings() {
  return {{'"', '\\', TokenKind::StringLiteral}, {'\'', '\\', TokenKind::CharLiteral}};
}

// Brackets and ';' are punctuation, not operators.
constexpr std::string_view kCOperators =
    ". -> ++ -- & * + - ~ ! / % << >> < > <= >= == != ^ | && || ? : ... "
    "= *= /= %= += -= <<= >>= &= ^= |= , # ##";

constexpr std::string_view kCKeywords =
    "auto break case char const continue default do double else enum extern float for goto if "
    "inline int long register restrict return short signed sizeof static struct switch typedef "
    "union unsigned void volatile while _Alignas _Alignof _Atomic _Bool _Complex _Generic "
    "_Imaginary _Noreturn _Static_assert _Thread_local";

constexpr std::string_view kCppExtraOperators = ":: .* ->*";

constexpr std::string_view kCppKeywords =
    "alignas alignof and and_eq asm auto bitand bitor bool break case catch char char16_t "
    "char32_t class compl const constexpr const_cast continue decltype default delete do double "
    "dynamic_cast else enum explicit export extern false float for friend goto if inline int "
    "long mutable namespace new noexcept not not_eq nullptr operator or or_eq private protected "
    "public register reinterpret_cast return short signed sizeof static static_assert "
    "static_cast struct switch template this thread_local throw true try typedef typeid "
    "typename union unsigned using virtual void volatile wchar_t while xor xor_eq";

constexpr std::string_view kJavaOperators =
    "= > < ! ~ ? : -> == >= <= != && || ++ -- + - * / & | ^ % << >> >>> += -= *= /= &= |= ^= "
    "%= <<= >>= >>>= . , ... @ ::";

constexpr std::string_view kJavaKeywords =
    "abstract assert boolean break byte case catch char class const continue default do double "
    "else enum extends final finally float for goto if implements import instanceof int "
    "interface long native new package private protected public return short static strictfp "
    "super switch synchronized this throw throws transient try void volatile while true false "
    "null";

std::string extension_of(std::string_view path) {
  return std::filesystem::path(std::string(path)).extension().string();
}

}  // namespace

bool LanguageProfile::is_operator(std::string_view t) const {
  return operators.find(std::string(t)) != operators.end();
}

bool LanguageProfile::is_keyword(std::string_view t) const {
  return keywords.find(std::string(t)) != keywords.end();
}

bool LanguageProfile::is_deref_op(std::string_view t) const {
  return std::find(deref_ops.begin(), deref_ops.end(), t) != deref_ops.end();
}

bool LanguageProfile::is_null_literal(std::string_view t) const {
  return null_literals.find(std::string(t)) != null_literals.end();
}

bool LanguageProfile::is_open(std::string_view t) const {
  return std::any_of(open_close_pairs.begin(), open_close_pairs.end(),
                     [&](const BracketPair& p) { return p.open == t; });
}

bool LanguageProfile::is_close(std::string_view t) const {
  return std::any_of(open_close_pairs.begin(), open_close_pairs.end(),
                     [&](const BracketPair& p) { return p.close == t; });
}

std::size_t LanguageProfile::max_operator_length() const {
  std::size_t n = 1;
  for (const auto& op : operators) n = std::max(n, op.size());
  return n;
}

void validate_profile(const LanguageProfile& p) {
  auto fail = [&](const std::string& why) {
    throw ProfileError(ProfileError::Code::MalformedProfile,
                       "malformed profile '" + p.name + "': " + why);
  };
  if (p.name.empty()) fail("empty name");
  if (p.operators.empty()) fail("operator set is empty");
  for (const auto& op : p.operators) {
    if (op.empty()) fail("empty operator");
    if (std::any_of(op.begin(), op.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n'; }))
      fail("operator '" + op + "' contains whitespace");
  }
  for (const auto& kw : p.keywords)
    if (kw.empty()) fail("empty keyword");
  for (const auto& d : p.deref_ops)
    if (!p.is_operator(d)) fail("deref operator '" + d + "' is not in the operator set");
  if (p.stmt_terminator.empty() ||
      p.stmt_terminator.find_first_of(" \t\n") != std::string::npos)
    fail("statement terminator must be a single token");
  std::set<std::string> opens, closes;
  for (const auto& pair : p.open_close_pairs) {
    if (pair.open.empty() || pair.close.empty()) fail("empty bracket");
    if (pair.open == pair.close) fail("bracket '" + pair.open + "' closes itself");
    if (!opens.insert(pair.open).second) fail("open bracket '" + pair.open + "' paired twice");
    if (!closes.insert(pair.close).second) fail("close bracket '" + pair.close + "' paired twice");
  }
  for (const auto& o : opens)
    if (closes.count(o) != 0) fail("'" + o + "' is both an open and a close bracket");
  if (!p.block_comment.open.empty() && p.block_comment.close.empty())
    fail("block comment has no closing delimiter");
  for (const auto& ext : p.file_extensions)
    if (ext.size() < 2 || ext[0] != '.') fail("extension '" + ext + "' must start with '.'");
}

LanguageProfile c_profile() {
  LanguageProfile p;
  p.name = "c";
  p.file_extensions = {".c", ".h"};
  p.line_comment = "//";
  p.block_comment = {"/*", "*/"};
  p.string_delims = c_family_strings();
  p.operators = words(kCOperators);
  p.keywords = words(kCKeywords);
  p.stmt_terminator = ";";
  p.deref_ops = {"->", "."};
  p.null_literals = {"NULL"};
  p.open_close_pairs = c_family_brackets();
  p.preprocessor_lines = true;
  return p;
}

LanguageProfile cpp_profile() {
  LanguageProfile p = c_profile();
  p.name = "cpp";
  p.file_extensions = {".cpp", ".cc", ".cxx", ".hpp", ".hh", ".hxx"};
  for (const auto& op : words(kCppExtraOperators)) p.operators.insert(op);
  p.keywords = words(kCppKeywords);
  p.null_literals = {"NULL", "nullptr"};
  return p;
}

LanguageProfile java_profile() {
  LanguageProfile p;
  p.name = "java";
  p.file_extensions = {".java"};
  p.line_comment = "//";
  p.block_comment = {"/*", "*/"};
  p.string_delims = c_family_strings();
  p.operators = words(kJavaOperators);
  p.keywords = words(kJavaKeywords);
  p.stmt_terminator = ";";
  p.deref_ops = {"."};
  p.null_literals = {"null"};
  p.open_close_pairs = c_family_brackets();
  p.preprocessor_lines = false;
  return p;
}

ProfileRegistry ProfileRegistry::with_builtins() {
  ProfileRegistry r;
  r.register_profile(c_profile());
  r.register_profile(cpp_profile());
  r.register_profile(java_profile());
  return r;
}

void ProfileRegistry::register_profile(LanguageProfile profile) {
  validate_profile(profile);
  if (profiles_.count(profile.name) != 0)
    throw ProfileError(ProfileError::Code::DuplicateName,
                       "language '" + profile.name + "' is already registered");
  for (const auto& ext : profile.file_extensions) {
    if (auto it = extensions_.find(ext); it != extensions_.end())
      throw ProfileError(ProfileError::Code::DuplicateName,
                         "extension '" + ext + "' is already registered to '" + it->second + "'");
  }
  for (const auto& ext : profile.file_extensions) extensions_.emplace(ext, profile.name);
  auto name = profile.name;
  profiles_.emplace(std::move(name), std::move(profile));
}

const LanguageProfile& ProfileRegistry::profile_for(std::string_view name_or_path) const {
  if (auto it = profiles_.find(name_or_path); it != profiles_.end()) return it->second;
  if (const LanguageProfile* p = find_by_extension(name_or_path)) return *p;
  std::string known;
  for (const auto& n : names()) known += (known.empty() ? "" : ", ") + n;
  throw ProfileError(ProfileError::Code::UnknownLanguage,
                     "unknown language for '" + std::string(name_or_path) +
                         "' (registered: " + known + ")");
}

const LanguageProfile* ProfileRegistry::find_by_extension(std::string_view path) const {
  const auto ext = extension_of(path);
  if (ext.empty()) return nullptr;
  auto it = extensions_.find(ext);
  return it == extensions_.end() ? nullptr : &profiles_.find(it->second)->second;
}

std::vector<std::string> ProfileRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : profiles_) out.push_back(name);
  return out;
}

}  // namespace xcheck
