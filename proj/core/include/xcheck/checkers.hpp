#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "xcheck/ast.hpp"
#include "xcheck/diagnostic.hpp"
#include "xcheck/profile.hpp"

namespace xcheck {

std::vector<Diagnostic> check_redundant_conditions(const StmtList& stmts,
                                                   std::string_view file = {});
std::vector<Diagnostic> check_redundant_branches(const StmtList& stmts,
                                                 std::string_view file = {});
std::vector<Diagnostic> check_loop_direction(const StmtList& stmts, std::string_view file = {});
std::vector<Diagnostic> check_null_deref(const StmtList& stmts, const LanguageProfile& profile,
                                         std::string_view file = {});

/// The warning rule of the loop-direction checker on its own.
bool loop_direction_conflicts(CompareOp cond, UpdateOp update);

/// Runs each enabled checker independently; result is normalized.
std::vector<Diagnostic> run_checkers(const StmtList& stmts, const LanguageProfile& profile,
                                     const std::set<CheckerId>& enabled,
                                     std::string_view file = {});

// ---------------------------------------------------------------------------
// Null-dereference machinery, exposed for testing.
// ---------------------------------------------------------------------------

/// Root identifier plus (deref-op, member) steps, compared by text.
struct PathKey {
  std::string root;
  std::vector<std::pair<std::string, std::string>> steps;

  std::string str() const;
  friend bool operator==(const PathKey&, const PathKey&) = default;
  friend auto operator<=>(const PathKey&, const PathKey&) = default;
};

struct NullEvent {
  enum class Kind { Deref, Test, Kill, Reset };

  Kind kind;
  /// For Kill only `root` is meaningful.
  PathKey path;
  Span span;
};

std::string_view to_string(NullEvent::Kind kind);

/// Dereference, null-test, kill and reset events in checker walk order.
std::vector<NullEvent> collect_null_events(const StmtList& stmts,
                                           const LanguageProfile& profile);

struct NonNullEntry {
  PathKey path;
  Position deref_pos;
};

/// The list of paths currently believed non-null.
class NonNullList {
 public:
  /// Keeps the first dereference position if the path is already present.
  void insert(const PathKey& path, Position deref_pos);
  /// Removes every entry rooted at `root`.
  void kill_root(std::string_view root);
  /// Removes and returns the entry for `path` if present.
  std::optional<NonNullEntry> take(const PathKey& path);
  bool contains(const PathKey& path) const;
  bool has_root(std::string_view root) const;
  void clear() { entries_.clear(); }
  const std::vector<NonNullEntry>& entries() const { return entries_; }

 private:
  std::vector<NonNullEntry> entries_;
};

struct NullFinding {
  PathKey path;
  Span test;
  Position deref_pos;
};

/// Replays an event log through the non-null list.
std::vector<NullFinding> replay_null_events(const std::vector<NullEvent>& events);

}  // namespace xcheck
