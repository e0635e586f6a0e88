#include "almg/report.hpp"

#include "almg/algebra_io.hpp"

#ifndef ALMG_VERSION
#define ALMG_VERSION "0.0.0"
#endif

namespace almg {

std::string tool_version() { return ALMG_VERSION; }

json to_json(const CheckReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"law", x.law}, {"tuple", x.tuple}});
  return {{"name", r.name},
          {"passed", r.passed},
          {"checked", r.checked},
          {"skipped", r.skipped},
          {"failures", r.failures},
          {"failures_by_law", r.failures_by_law},
          {"witnesses", w},
          {"truncated", r.truncated()},
          {"details", r.details}};
}

CheckReport check_report_from_json(const json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.checked = j.at("checked").get<std::uint64_t>();
  r.skipped = j.at("skipped").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::uint64_t>();
  r.failures_by_law = j.at("failures_by_law").get<std::map<std::string, std::uint64_t>>();
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back({w.at("law").get<std::string>(), w.at("tuple").get<std::vector<Elem>>()});
  r.details = j.at("details").get<std::map<std::string, std::string>>();
  return r;
}

namespace {

json report_list(const std::vector<CheckReport>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

std::vector<CheckReport> report_list_from(const json& j) {
  std::vector<CheckReport> out;
  for (const auto& r : j) out.push_back(check_report_from_json(r));
  return out;
}

}  // namespace

json to_json(const Classification& c) {
  return {{"autometrized", c.autometrized},     {"lattice_ordered", c.lattice_ordered},
          {"semiregular", c.semiregular},       {"representable", c.representable},
          {"al_monoid", c.al_monoid},           {"reports", report_list(c.reports)}};
}

Classification classification_from_json(const json& j) {
  Classification c;
  c.autometrized = j.at("autometrized").get<bool>();
  c.lattice_ordered = j.at("lattice_ordered").get<bool>();
  c.semiregular = j.at("semiregular").get<bool>();
  c.representable = j.at("representable").get<bool>();
  c.al_monoid = j.at("al_monoid").get<bool>();
  c.reports = report_list_from(j.at("reports"));
  return c;
}

json to_json(const TheoremSuiteReport& s) {
  return {{"classification", to_json(s.classification)},
          {"theorems", report_list(s.theorems)},
          {"predicates", report_list(s.predicates)},
          {"findings", report_list(s.findings)},
          {"theorems_skipped", s.theorems_skipped},
          {"all_theorems_passed", s.all_theorems_passed()},
          {"is_chain", s.is_chain},
          {"has_t1", s.has_t1},
          {"has_t2", s.has_t2},
          {"has_beta", s.has_beta},
          {"is_ptolemaic", s.is_ptolemaic},
          {"is_metrically_convex", s.is_metrically_convex}};
}

TheoremSuiteReport theorem_suite_from_json(const json& j) {
  TheoremSuiteReport s;
  s.classification = classification_from_json(j.at("classification"));
  s.theorems = report_list_from(j.at("theorems"));
  s.predicates = report_list_from(j.at("predicates"));
  s.findings = report_list_from(j.at("findings"));
  s.theorems_skipped = j.at("theorems_skipped").get<bool>();
  s.is_chain = j.at("is_chain").get<bool>();
  s.has_t1 = j.at("has_t1").get<bool>();
  s.has_t2 = j.at("has_t2").get<bool>();
  s.has_beta = j.at("has_beta").get<bool>();
  s.is_ptolemaic = j.at("is_ptolemaic").get<bool>();
  s.is_metrically_convex = j.at("is_metrically_convex").get<bool>();
  return s;
}

json to_json(const EnumerationResult& r) {
  json algs = json::array();
  for (const auto& a : r.algebras) algs.push_back(format_algebra(a));
  return {{"algebras", algs},
          {"nodes", r.nodes},
          {"pruned", r.pruned},
          {"found", r.found},
          {"emitted", r.algebras.size()},
          {"dedup_collapsed", r.dedup_collapsed},
          {"exhausted", r.exhausted}};
}

EnumerationResult enumeration_from_json(const json& j) {
  EnumerationResult r;
  for (const auto& a : j.at("algebras")) r.algebras.push_back(parse_algebra(a.get<std::string>()));
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.pruned = j.at("pruned").get<std::uint64_t>();
  r.found = j.at("found").get<std::uint64_t>();
  r.dedup_collapsed = j.at("dedup_collapsed").get<std::uint64_t>();
  r.exhausted = j.at("exhausted").get<bool>();
  return r;
}

json ReportDocument::to_json(bool with_timing) const {
  json entries_json = json::array();
  json timing = json::array();
  double total = 0;
  for (const auto& e : entries) {
    entries_json.push_back({{"name", e.name}, {"kind", e.kind}, {"result", e.result}});
    timing.push_back({{"name", e.name}, {"seconds", e.seconds}});
    total += e.seconds;
  }
  json j = {{"tool", {{"name", "almg"}, {"version", tool_version}}},
            {"input", input},
            {"entries", entries_json}};
  if (with_timing) j["timing"] = {{"entries", timing}, {"total_seconds", total}};
  return j;
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument d;
  d.tool_version = j.at("tool").at("version").get<std::string>();
  d.input = j.at("input").get<std::string>();
  const json* timing = j.contains("timing") ? &j.at("timing").at("entries") : nullptr;
  const auto& entries = j.at("entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ReportEntry e;
    e.name = entries[i].at("name").get<std::string>();
    e.kind = entries[i].at("kind").get<std::string>();
    e.result = entries[i].at("result");
    if (timing && i < timing->size()) e.seconds = (*timing)[i].at("seconds").get<double>();
    d.entries.push_back(std::move(e));
  }
  return d;
}

std::string ReportDocument::dump(bool with_timing) const {
  return to_json(with_timing).dump(2) + "\n";
}

}  // namespace almg
