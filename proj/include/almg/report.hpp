#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "almg/check_report.hpp"
#include "almg/checks.hpp"
#include "almg/geometry.hpp"
#include "almg/search.hpp"

namespace almg {

using json = nlohmann::json;

json to_json(const CheckReport& r);
json to_json(const Classification& c);
json to_json(const TheoremSuiteReport& s);
/// Algebras are embedded as algebra-format text.
json to_json(const EnumerationResult& r);

CheckReport check_report_from_json(const json& j);
Classification classification_from_json(const json& j);
TheoremSuiteReport theorem_suite_from_json(const json& j);
EnumerationResult enumeration_from_json(const json& j);

struct ReportEntry {
  std::string name;
  std::string kind;  // check, classification, theorem_suite, enumeration, value
  json result;
  double seconds = 0;

  bool operator==(const ReportEntry&) const = default;
};

/// Everything one CLI invocation reports. Timing lives in its own section so
/// the rest of the document is byte-stable.
struct ReportDocument {
  std::string tool_version;
  std::string input;
  std::vector<ReportEntry> entries;

  json to_json(bool with_timing = true) const;
  static ReportDocument from_json(const json& j);
  /// Keys sorted, two-space indent.
  std::string dump(bool with_timing = true) const;

  bool operator==(const ReportDocument&) const = default;
};

std::string tool_version();

}  // namespace almg
