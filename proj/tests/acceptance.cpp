// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "almg/checks.hpp"
#include "almg/geometry.hpp"
#include "almg/intervals.hpp"
#include "almg/models.hpp"
#include "almg/report.hpp"
#include "almg/search.hpp"

using namespace almg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

bool suite_ok(const TheoremSuiteReport& s) {
  return s.classification.al_monoid && !s.theorems_skipped && s.all_theorems_passed();
}

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  const Algebra b2 = make_boolean(2);
  const auto s = run_theorem_suite(b2);
  o.require(suite_ok(s), "B2 suite");
  for (const char* name : {"fixty_equivalence", "no_equilateral", "t2", "lattice_implies_metric",
                           "quadrilateral_lemma", "ptolemaic", "b_implies_d"}) {
    const auto* r = s.find(name);
    o.require(r && r->passed, std::string("theorem ") + name);
  }
  const auto* p = s.find("ptolemaic");
  o.require(p && p->checked == 3 * 256, "ptolemaic over 256 quadruples");
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(t) + " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto t0 = Clock::now();
  for (unsigned n = 1; n <= 16; ++n)
    for (ChainMode m : {ChainMode::truncated, ChainMode::max}) {
      const Algebra c = make_chain(n, m);
      const std::string tag = "chain " + std::to_string(n);
      o.require(classify(c).al_monoid, tag + " AL-monoid");
      o.require(is_chain(c), tag + " is_chain");
      o.require(find_fixty_triangles(c).empty(), tag + " fixty-free");
    }
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(t) + " s";
  return o;
}

Outcome ac3() {
  Outcome o;
  const Algebra b2 = make_boolean(2);
  o.require(!is_chain(b2), "B2 not a chain");
  o.require(has_fixty(b2, Triangle(1, 2, 3)), "fixty (1,2,3)");
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto x = IntervalSet::closed(0, 2), y = IntervalSet::closed(2, 3);
  const auto j = iv_union(x, y);
  const auto w = iv_intersect(iv_star(x, j), iv_star(y, j));
  o.require(w == IntervalSet::point(2), "witness = {2}, got " + w.to_string());
  const auto r = demo_axiom4_failure();
  o.require(r.passed && r.details.at("witness") == "[2,2]", "demo ex");
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto a = IntervalSet::closed(0, 2), b = IntervalSet::closed(1, 3);
  const auto c = IntervalSet::from({{0, 1}, {2, 3}});
  o.require(iv_star(a, b) == c, "A*B = C");
  o.require(iv_star(b, c) == a, "B*C = A");
  o.require(iv_star(c, a) == b, "C*A = B");
  const auto m = iv_intersect(iv_intersect(a, b), c);
  o.require(m == IntervalSet::from({{1, 1}, {2, 2}}), "meet = {1} u {2}, got " + m.to_string());
  o.require(demo_fixty_nonzero_meet().passed, "demo fixty");
  return o;
}

Outcome ac6() {
  Outcome o;
  const unsigned N = 8;
  const Algebra a = make_z_window_u(N);
  const auto c = classify(a);
  std::uint64_t skipped = 0;
  for (const char* name : {"lattice", "monoid", "metric", "contractions", "axiom2", "axiom4"}) {
    const auto* r = c.find(name);
    o.require(r && r->failures == 0, std::string(name) + " has no failures");
    if (r) skipped += r->skipped;
  }
  o.require(skipped > 0, "skipped counts reported");
  for (int z = -int(N); z <= int(N); ++z)
    o.require(!drl_difference(a, z_window_u_index(N, z), kWindowU).has_value(),
              "difference absent for " + std::to_string(z));
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(skipped) + " skipped instances";
  return o;
}

Outcome ac7() {
  Outcome o;
  const Algebra a = make_z_window_uv(8);
  const auto ax2 = check_axiom2(a);
  o.require(!ax2.passed, "axiom2 fails");
  o.require(!ax2.witnesses.empty() &&
                ax2.witnesses.front().tuple == std::vector<Elem>{kWindowV, kWindowU},
            "witness (v,u)");
  o.require(check_lattice(a).passed && check_monoid(a).passed && check_metric(a).passed,
            "item (1)");
  o.require(check_contractions(a).passed, "item (3)");
  o.require(check_axiom4(a).passed, "item (4)");
  return o;
}

// Canonical forms of all AL-monoids of size n from a plain full-table scan:
// every lattice order, every zero, every + table and every * table.
std::set<std::string> naive_al_monoids(std::size_t n) {
  std::set<std::string> out;
  std::size_t cells = n * n;
  std::vector<std::vector<Elem>> tables;
  std::vector<Elem> t(cells, 0);
  while (true) {
    tables.push_back(t);
    std::size_t i = 0;
    while (i < cells && ++t[i] == n) t[i++] = 0;
    if (i == cells) break;
  }
  for (const auto& lat : enumerate_lattice_orders(n, false)) {
    for (Elem z = 0; z < n; ++z) {
      std::vector<const std::vector<Elem>*> adds, stars;
      for (const auto& tab : tables) {
        Algebra probe(n, z, tab, lat.join, lat.meet, tab);
        if (check_monoid(probe).passed) adds.push_back(&tab);
        if (check_laws(probe, "m12", laws::metric().first(2)).passed) stars.push_back(&tab);
      }
      for (const auto* ad : adds)
        for (const auto* st : stars) {
          Algebra a(n, z, *ad, lat.join, lat.meet, *st);
          if (classify(a).al_monoid) out.insert(canonical_form(a));
        }
    }
  }
  return out;
}

Outcome ac8() {
  Outcome o;
  for (std::size_t n : {2, 3}) {
    const auto r = enumerate_al_monoids(n);
    std::set<std::string> got;
    for (const auto& a : r.algebras) got.insert(canonical_form(a));
    o.require(r.exhausted && got == naive_al_monoids(n),
              "size " + std::to_string(n) + " matches brute force");
  }
  const auto t0 = Clock::now();
  const auto r4 = enumerate_al_monoids(4);
  const double t = seconds_since(t0);
  o.require(r4.exhausted, "size 4 exhausted");
  o.require(t < 600, "size 4 within 10 minutes");
  std::size_t bad = 0;
  for (const auto& a : r4.algebras)
    if (!suite_ok(run_theorem_suite(a))) ++bad;
  o.require(bad == 0, std::to_string(bad) + " algebras break a theorem");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(r4.algebras.size()) +
            " algebras at size 4 in " + std::to_string(t) + " s";
  return o;
}

Outcome ac9() {
  Outcome o;
  std::uint64_t algebras = 0, with_failures = 0, failures = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_al_monoids(n).algebras) {
      const auto r = check_star_monotone(a);
      ++algebras;
      // Either outcome is acceptable; a failing report must carry witnesses
      // that really falsify the statement.
      if (!r.passed) {
        ++with_failures;
        failures += r.failures;
        o.require(!r.witnesses.empty(), "witnesses listed");
        for (const auto& w : r.witnesses)
          o.require(evaluate_law(a, w.law, w.tuple) == Truth::no, "witness re-evaluates false");
      }
    }
  }
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(with_failures) + " of " +
            std::to_string(algebras) + " algebras have witnesses (" + std::to_string(failures) +
            " triples)";
  return o;
}

std::string capture(const std::string& command) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return out;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Outcome ac10() {
  Outcome o;
  const std::string cli = ALMG_CLI_PATH;
  const std::vector<std::string> commands = {
      "check --model z-u:8",
      "check --model z-uv:8",
      "geometry --model boolean:2",
      "geometry --model chain:3:max",
      "enumerate --size 4 --suite",
      "search --size 3 --require axiom4 --violate axiom2",
      "search --size 4 --require lattice,monoid,metric,contractions,axiom4 --violate axiom2",
      "intervals ex",
      "intervals fixty",
  };
  for (const auto& cmd : commands) {
    auto strip = [](const std::string& text) {
      json j = json::parse(text, nullptr, false);
      if (j.is_discarded()) return std::string("<unparsable>");
      j.erase("timing");
      return j.dump(2);
    };
    const auto one = capture(cli + " --json --threads 1 " + cmd);
    const auto eight = capture(cli + " --json --threads 8 " + cmd);
    o.require(!one.empty() && strip(one) != "<unparsable>" && strip(one) == strip(eight),
              "'" + cmd + "'");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  B2 is an AL-monoid and passes the theorem suite in < 1 s", ac1},
      {"AC2  chains 1..16 in both modes are fixty-free AL-monoids in < 1 s", ac2},
      {"AC3  B2 is not a chain and (1,2,3) has fixty", ac3},
      {"AC4  interval witness {2} for x=[0,2], y=[2,3]", ac4},
      {"AC5  interval fixty triangle with meet {1} u {2}", ac5},
      {"AC6  Z+u window: no failures, skipped counts, no least difference", ac6},
      {"AC7  Z+u+v window: axiom2 fails at (v,u), items (1),(3),(4) hold", ac7},
      {"AC8  enumeration matches brute force at 2,3; size 4 passes the suite", ac8},
      {"AC9  monotonicity evaluated on every AL-monoid up to size 4", ac9},
      {"AC10 --json output identical for --threads 1 and --threads 8", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.note.empty()) std::cout << "  [" << o.note << "]";
    std::cout << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
