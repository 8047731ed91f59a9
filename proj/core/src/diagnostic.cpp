#include "xcheck/diagnostic.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <tuple>

namespace xcheck {

std::string_view to_string(CheckerId id) {
  switch (id) {
    case CheckerId::RedundantCondition: return "redundant-condition";
    case CheckerId::RedundantBranch: return "redundant-branch";
    case CheckerId::LoopDirection: return "loop-direction";
    case CheckerId::NullDeref: return "null-deref";
  }
  return "?";
}

std::optional<CheckerId> checker_from_string(std::string_view name) {
  for (CheckerId id : kAllCheckers)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::set<CheckerId> all_checkers() { return {std::begin(kAllCheckers), std::end(kAllCheckers)}; }

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
  auto related_key = [](const Diagnostic& d) {
    return d.related ? std::make_tuple(1, d.related->pos.offset, d.related->pos.line,
                                       d.related->pos.column, std::string_view(d.related->note))
                     : std::make_tuple(0, std::size_t{0}, std::uint32_t{0}, std::uint32_t{0},
                                       std::string_view{});
  };
  auto key = [&](const Diagnostic& d) {
    return std::make_tuple(std::string_view(d.file), d.start.offset, to_string(d.checker),
                           d.start.line, d.start.column, d.end.offset, d.end.line, d.end.column,
                           std::string_view(d.message), related_key(d));
  };
  return key(a) < key(b);
}

void normalize(std::vector<Diagnostic>& diags) {
  std::sort(diags.begin(), diags.end(), diagnostic_less);
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
}

std::string render_text(const std::vector<Diagnostic>& diags) {
  std::ostringstream out;
  for (const auto& d : diags) {
    out << d.file << ':' << d.start.line << ':' << d.start.column << ": warning ["
        << to_string(d.checker) << "]: " << d.message << '\n';
    if (d.related)
      out << "  note: " << d.related->note << " at " << d.related->pos.line << ':'
          << d.related->pos.column << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<Diagnostic>& diags) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& d : diags) {
    nlohmann::ordered_json o;
    o["checker"] = std::string(to_string(d.checker));
    o["message"] = d.message;
    o["file"] = d.file;
    o["start_line"] = d.start.line;
    o["start_col"] = d.start.column;
    o["end_line"] = d.end.line;
    o["end_col"] = d.end.column;
    if (d.related) {
      o["related_line"] = d.related->pos.line;
      o["related_col"] = d.related->pos.column;
      o["related_note"] = d.related->note;
    }
    doc.push_back(std::move(o));
  }
  return doc.dump(2);
}

std::vector<Diagnostic> parse_json_diagnostics(std::string_view text) {
  std::vector<Diagnostic> out;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw DiagnosticParseError("diagnostic document must be an array");
    for (const auto& o : doc) {
      Diagnostic d;
      const auto name = o.at("checker").get<std::string>();
      auto id = checker_from_string(name);
      if (!id) throw DiagnosticParseError("unknown checker '" + name + "'");
      d.checker = *id;
      d.message = o.at("message").get<std::string>();
      d.file = o.at("file").get<std::string>();
      d.start.line = o.at("start_line").get<std::uint32_t>();
      d.start.column = o.at("start_col").get<std::uint32_t>();
      d.end.line = o.at("end_line").get<std::uint32_t>();
      d.end.column = o.at("end_col").get<std::uint32_t>();
      if (o.contains("related_line")) {
        RelatedLocation r;
        r.pos.line = o.at("related_line").get<std::uint32_t>();
        r.pos.column = o.at("related_col").get<std::uint32_t>();
        r.note = o.at("related_note").get<std::string>();
        d.related = std::move(r);
      }
      out.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DiagnosticParseError(std::string("invalid diagnostic JSON: ") + e.what());
  }
  return out;
}

}  // namespace xcheck
