#include <doctest.h>

#include "almg/models.hpp"
#include "almg/report.hpp"

using namespace almg;

TEST_CASE("check reports round-trip") {
  Algebra a = make_boolean(2);
  a.set(Op::star, 1, 2, 0);
  const auto c = classify(a);
  for (const auto& r : c.reports) CHECK(check_report_from_json(to_json(r)) == r);
  const auto back = classification_from_json(to_json(c));
  CHECK(back.reports == c.reports);
  CHECK(back.al_monoid == c.al_monoid);
  CHECK(back.autometrized == c.autometrized);
}

TEST_CASE("theorem suites round-trip") {
  const auto s = run_theorem_suite(make_chain(3, ChainMode::max));
  const auto back = theorem_suite_from_json(to_json(s));
  CHECK(back.theorems == s.theorems);
  CHECK(back.predicates == s.predicates);
  CHECK(back.findings == s.findings);
  CHECK(back.has_t1 == s.has_t1);
  CHECK(back.is_chain == s.is_chain);
  CHECK(to_json(back) == to_json(s));
}

TEST_CASE("enumeration results round-trip") {
  const auto r = enumerate_al_monoids(4);
  const auto back = enumeration_from_json(to_json(r));
  CHECK(back.algebras == r.algebras);
  CHECK(back.nodes == r.nodes);
  CHECK(back.exhausted == r.exhausted);
  CHECK(to_json(r).at("emitted") == 5);
}

TEST_CASE("documents are key-sorted, stable and re-parse equal") {
  ReportDocument d;
  d.tool_version = tool_version();
  d.input = "model boolean:2";
  d.entries.push_back({"classify", "classification", to_json(classify(make_boolean(2))), 0.25});
  d.entries.push_back({"value", "value", json{{"z", 1}, {"a", 2}}, 0.5});
  const std::string text = d.dump();
  CHECK(text.back() == '\n');
  CHECK(text.find("\"entries\"") < text.find("\"input\""));
  CHECK(text.find("\"input\"") < text.find("\"timing\""));
  CHECK(text.find("\"timing\"") < text.find("\"tool\""));

  const auto back = ReportDocument::from_json(json::parse(text));
  CHECK(back == d);
  CHECK(back.dump() == text);

  // Without timing the document does not depend on measured durations.
  ReportDocument slow = d;
  for (auto& e : slow.entries) e.seconds *= 10;
  CHECK(slow.dump(false) == d.dump(false));
  CHECK(slow.dump(true) != d.dump(true));
  CHECK_FALSE(json::parse(d.dump(false)).contains("timing"));
}
