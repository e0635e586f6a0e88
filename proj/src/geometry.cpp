#include "almg/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace almg {
namespace {

constexpr Truth eq(Elem x, Elem y) {
  if (x == kUndefined || y == kUndefined) return Truth::unknown;
  return truth(x == y);
}

Truth metric_between3(const Algebra& A, Elem a, Elem x, Elem b) {
  return eq(A.add(A.star(a, x), A.star(x, b)), A.star(a, b));
}

Truth lattice_between3(const Algebra& A, Elem a, Elem b, Elem c) {
  return A.le(A.meet(a, c), b) && A.le(b, A.join(a, c));
}

Truth fixty3(const Algebra& A, Elem a, Elem b, Elem c) {
  return eq(A.star(a, b), c) && eq(A.star(b, c), a) && eq(A.star(c, a), b);
}

// a v b = b v c = c v a and a ^ b ^ c = 0
Truth joins_meet_zero(const Algebra& A, Elem a, Elem b, Elem c) {
  const Elem ab = A.join(a, b), bc = A.join(b, c), ca = A.join(c, a);
  return eq(ab, bc) && eq(bc, ca) && eq(A.meet(A.meet(a, b), c), A.zero());
}

Truth subgeometry3(const Algebra& A, std::span<const Elem> s) {
  Truth all = Truth::yes;
  for (Elem x : s)
    for (Elem y : s) {
      const Elem v = A.star(x, y);
      if (v == kUndefined) {
        all = Truth::unknown;
        continue;
      }
      if (std::find(s.begin(), s.end(), v) == s.end()) return Truth::no;
    }
  return all;
}

// The derived triangle (a*b, b*c, c*a) is a triangle with fixty, and
// {0,a,b,c} is a subgeometry.
Truth derived_condition(const Algebra& A, Elem a, Elem b, Elem c) {
  const Elem x = A.star(a, b), y = A.star(b, c), z = A.star(c, a);
  if (x == kUndefined || y == kUndefined || z == kUndefined) return Truth::unknown;
  if (x == y || y == z || x == z) return Truth::no;
  const std::array<Elem, 4> s{A.zero(), a, b, c};
  return fixty3(A, x, y, z) && subgeometry3(A, s);
}

bool is_triangle(const Elem* t) { return t[0] < t[1] && t[1] < t[2]; }

#define ALMG_LAW(fn) Truth fn(const Algebra& A, const Elem* t)

ALMG_LAW(t1_law) {
  const Elem a = t[0], b = t[1], c = t[2], d = t[3];
  return implies(metric_between3(A, a, b, c) && metric_between3(A, a, d, b),
                 metric_between3(A, d, b, c));
}
ALMG_LAW(t2_law) {
  const Elem a = t[0], b = t[1], c = t[2], d = t[3];
  return implies(metric_between3(A, a, b, c) && metric_between3(A, a, d, b),
                 metric_between3(A, a, d, c));
}
ALMG_LAW(beta_law) {
  const Elem a = t[0], b = t[1], c = t[2];
  if (b == c) return Truth::yes;
  return !(metric_between3(A, a, b, c) && metric_between3(A, a, c, b));
}
// a*b + b*c = (a^c)*b + b*(a v c)
ALMG_LAW(quad_identity) {
  const Elem a = t[0], b = t[1], c = t[2];
  return eq(A.add(A.star(a, b), A.star(b, c)),
            A.add(A.star(A.meet(a, c), b), A.star(b, A.join(a, c))));
}
ALMG_LAW(quad_corollary) {
  const Elem a = t[0], b = t[1], c = t[2];
  return iff(metric_between3(A, a, b, c),
             metric_between3(A, A.meet(a, c), b, A.join(a, c)));
}
ALMG_LAW(quad_monotone) {
  const Elem a = t[0], b = t[1], c = t[2];
  return implies(A.le(a, b) && A.le(b, c), metric_between3(A, a, b, c));
}
ALMG_LAW(lattice_implies_metric) {
  return implies(lattice_between3(A, t[0], t[1], t[2]),
                 metric_between3(A, t[0], t[1], t[2]));
}
ALMG_LAW(betweenness_agree) {
  return iff(lattice_between3(A, t[0], t[1], t[2]),
             metric_between3(A, t[0], t[1], t[2]));
}
// a <= b v c and a*b >= a*c imply b <= c
ALMG_LAW(cond3_stated) {
  const Elem a = t[0], b = t[1], c = t[2];
  return implies(A.le(a, A.join(b, c)) && A.le(A.star(a, c), A.star(a, b)),
                 A.le(b, c));
}
// a >= b v c and a*b >= a*c imply b <= c
ALMG_LAW(cond3_argued) {
  const Elem a = t[0], b = t[1], c = t[2];
  return implies(A.le(A.join(b, c), a) && A.le(A.star(a, c), A.star(a, b)),
                 A.le(b, c));
}

// Pairings of a quadruple: {ab|cd}, {ac|bd}, {ad|bc}.
std::array<Elem, 3> pairings(const Algebra& A, const Elem* t) {
  const Elem a = t[0], b = t[1], c = t[2], d = t[3];
  return {A.meet(A.star(a, b), A.star(c, d)), A.meet(A.star(a, c), A.star(b, d)),
          A.meet(A.star(a, d), A.star(b, c))};
}
ALMG_LAW(ptolemy_1) {
  auto p = pairings(A, t);
  return A.le(p[0], A.add(p[1], p[2]));
}
ALMG_LAW(ptolemy_2) {
  auto p = pairings(A, t);
  return A.le(p[1], A.add(p[0], p[2]));
}
ALMG_LAW(ptolemy_3) {
  auto p = pairings(A, t);
  return A.le(p[2], A.add(p[0], p[1]));
}

// Triangle laws hold vacuously on tuples that are not strictly increasing.
ALMG_LAW(fixty_implies_joins) {
  if (!is_triangle(t)) return Truth::yes;
  return implies(fixty3(A, t[0], t[1], t[2]), joins_meet_zero(A, t[0], t[1], t[2]));
}
ALMG_LAW(fixty_implies_derived) {
  if (!is_triangle(t)) return Truth::yes;
  return implies(fixty3(A, t[0], t[1], t[2]), derived_condition(A, t[0], t[1], t[2]));
}
ALMG_LAW(joins_imply_fixty) {
  if (!is_triangle(t)) return Truth::yes;
  return implies(joins_meet_zero(A, t[0], t[1], t[2]), fixty3(A, t[0], t[1], t[2]));
}
ALMG_LAW(not_equilateral) {
  if (!is_triangle(t)) return Truth::yes;
  return !(eq(A.star(t[0], t[1]), A.star(t[1], t[2])) &&
           eq(A.star(t[1], t[2]), A.star(t[2], t[0])));
}

#undef ALMG_LAW

constexpr Law kT1{"t1", 4, t1_law};
constexpr Law kT2{"t2", 4, t2_law};
constexpr Law kBeta{"beta", 3, beta_law};
constexpr Law kQuadIdentity{"quad_identity", 3, quad_identity};
constexpr Law kQuadCorollary{"quad_corollary", 3, quad_corollary};
constexpr Law kQuadMonotone{"quad_monotone", 3, quad_monotone};
constexpr Law kLImpliesM{"lattice_implies_metric", 3, lattice_implies_metric};
constexpr Law kBetweennessAgree{"betweenness_agree", 3, betweenness_agree};
constexpr Law kCond3Stated{"cond3_stated", 3, cond3_stated};
constexpr Law kCond3Argued{"cond3_argued", 3, cond3_argued};
constexpr Law kPtolemy1{"ptolemy_1", 4, ptolemy_1};
constexpr Law kPtolemy2{"ptolemy_2", 4, ptolemy_2};
constexpr Law kPtolemy3{"ptolemy_3", 4, ptolemy_3};
constexpr Law kFixtyJoins{"fixty_implies_joins", 3, fixty_implies_joins};
constexpr Law kFixtyDerived{"fixty_implies_derived", 3, fixty_implies_derived};
constexpr Law kJoinsFixty{"joins_imply_fixty", 3, joins_imply_fixty};
constexpr Law kNotEquilateral{"not_equilateral", 3, not_equilateral};

constexpr std::array<const Law*, 17> kGeometryLaws{
    &kT1,           &kT2,           &kBeta,         &kQuadIdentity,
    &kQuadCorollary, &kQuadMonotone, &kLImpliesM,    &kBetweennessAgree,
    &kCond3Stated,  &kCond3Argued,  &kPtolemy1,     &kPtolemy2,
    &kPtolemy3,     &kFixtyJoins,   &kFixtyDerived, &kJoinsFixty,
    &kNotEquilateral};

Truth must(Truth t, const char* what) {
  if (t == Truth::unknown)
    throw std::domain_error(std::string(what) + " touches an undefined cell");
  return t;
}

void require_indices(const Algebra& alg, std::initializer_list<Elem> xs) {
  for (Elem x : xs) alg.require_index(x);
}

// Runs triangle laws over strictly increasing triples only.
CheckReport check_triangles(const Algebra& alg, std::string name,
                            std::initializer_list<const Law*> laws,
                            const CheckOptions& opts) {
  ReportBuilder r(std::move(name), opts.witness_cap);
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c) {
        const std::array<Elem, 3> t{a, b, c};
        for (const Law* law : laws) r.record(law->name, law->eval(alg, t.data()), {a, b, c});
      }
  return std::move(r).finish();
}

std::vector<std::vector<Elem>> subsets(Elem n, unsigned k) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur;
  auto rec = [&](auto&& self, Elem start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Elem x = start; x < n; ++x) {
      cur.push_back(x);
      self(self, static_cast<Elem>(x + 1));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void validate_tuple(const Algebra& alg, std::span<const Elem> tuple) {
  if (tuple.size() < 3 || tuple.size() > 6)
    throw std::invalid_argument("linearity tuples must have 3 to 6 elements");
  for (Elem x : tuple) alg.require_index(x);
  std::vector<Elem> sorted(tuple.begin(), tuple.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("linearity tuples must be pairwise distinct");
}

Truth b_linear_labeling(const Algebra& A, const std::vector<Elem>& p, Betweenness rel) {
  Truth all = Truth::yes;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Truth t = rel == Betweenness::metric ? metric_between3(A, p[i], p[j], p[k])
                                             : lattice_between3(A, p[i], p[j], p[k]);
        if (t == Truth::no) return Truth::no;
        if (t == Truth::unknown) all = Truth::unknown;
      }
  return all;
}

Truth d_linear_labeling(const Algebra& A, const std::vector<Elem>& p) {
  Elem sum = A.star(p[0], p[1]);
  for (std::size_t i = 1; i + 1 < p.size(); ++i) sum = A.add(sum, A.star(p[i], p[i + 1]));
  return eq(A.star(p.front(), p.back()), sum);
}

// Searches labelings; `unknown` when no labeling is definitely valid but some
// could not be decided.
template <class Pred>
std::pair<Truth, std::vector<Elem>> search_labelings(std::span<const Elem> tuple, Pred pred) {
  std::vector<Elem> p(tuple.begin(), tuple.end());
  std::sort(p.begin(), p.end());
  bool unknown = false;
  do {
    Truth t = pred(p);
    if (t == Truth::yes) return {Truth::yes, p};
    if (t == Truth::unknown) unknown = true;
  } while (std::next_permutation(p.begin(), p.end()));
  return {unknown ? Truth::unknown : Truth::no, {}};
}

}  // namespace

namespace detail {
std::span<const Law* const> geometry_laws() { return kGeometryLaws; }
}  // namespace detail

Triangle::Triangle(Elem a, Elem b, Elem c) : a_(a), b_(b), c_(c) {
  if (a == b || b == c || a == c)
    throw std::invalid_argument("triangle vertices must be pairwise distinct");
}

bool metric_between(const Algebra& alg, Elem a, Elem x, Elem b) {
  require_indices(alg, {a, x, b});
  return must(metric_between3(alg, a, x, b), "metric betweenness") == Truth::yes;
}

bool lattice_between(const Algebra& alg, Elem a, Elem b, Elem c) {
  require_indices(alg, {a, b, c});
  return must(lattice_between3(alg, a, b, c), "lattice betweenness") == Truth::yes;
}

bool has_fixty(const Algebra& alg, const Triangle& t) {
  require_indices(alg, {t.a(), t.b(), t.c()});
  return must(fixty3(alg, t.a(), t.b(), t.c()), "fixty") == Truth::yes;
}

bool is_subgeometry(const Algebra& alg, std::span<const Elem> subset) {
  for (Elem x : subset) alg.require_index(x);
  return must(subgeometry3(alg, subset), "subgeometry") == Truth::yes;
}

std::optional<Triangle> find_equilateral(const Algebra& alg) {
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c) {
        const std::array<Elem, 3> t{a, b, c};
        if (not_equilateral(alg, t.data()) == Truth::no) return Triangle(a, b, c);
      }
  return std::nullopt;
}

std::vector<Triangle> find_isosceles(const Algebra& alg) {
  std::vector<Triangle> out;
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c) {
        const Elem x = alg.star(a, b), y = alg.star(b, c), z = alg.star(c, a);
        if (x == kUndefined || y == kUndefined || z == kUndefined) continue;
        if (x == y || y == z || x == z) out.emplace_back(a, b, c);
      }
  return out;
}

std::vector<Triangle> find_fixty_triangles(const Algebra& alg) {
  std::vector<Triangle> out;
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c)
        if (fixty3(alg, a, b, c) == Truth::yes) out.emplace_back(a, b, c);
  return out;
}

std::vector<Elem> atoms(const Algebra& alg) {
  std::vector<Elem> out;
  const auto n = static_cast<Elem>(alg.size());
  const Elem z = alg.zero();
  auto strictly_above_zero = [&](Elem x) {
    return x != z && alg.le(z, x) == Truth::yes;
  };
  for (Elem c = 0; c < n; ++c) {
    if (!strictly_above_zero(c)) continue;
    bool atom = true;
    for (Elem x = 0; x < n && atom; ++x)
      if (x != c && strictly_above_zero(x) && alg.le(x, c) == Truth::yes) atom = false;
    if (atom) out.push_back(c);
  }
  return out;
}

std::optional<std::vector<Elem>> is_b_linear(const Algebra& alg, std::span<const Elem> tuple,
                                             Betweenness relation) {
  validate_tuple(alg, tuple);
  auto [t, labeling] = search_labelings(
      tuple, [&](const std::vector<Elem>& p) { return b_linear_labeling(alg, p, relation); });
  must(t, "B-linearity");
  if (t == Truth::yes) return labeling;
  return std::nullopt;
}

std::optional<std::vector<Elem>> is_d_linear(const Algebra& alg, std::span<const Elem> tuple) {
  validate_tuple(alg, tuple);
  auto [t, labeling] = search_labelings(
      tuple, [&](const std::vector<Elem>& p) { return d_linear_labeling(alg, p); });
  must(t, "D-linearity");
  if (t == Truth::yes) return labeling;
  return std::nullopt;
}

CheckReport fixty_equivalence_check(const Algebra& alg, const CheckOptions& opts) {
  return check_triangles(alg, "fixty_equivalence", {&kFixtyJoins, &kFixtyDerived, &kJoinsFixty},
                         opts);
}

CheckReport check_no_equilateral(const Algebra& alg, const CheckOptions& opts) {
  return check_triangles(alg, "no_equilateral", {&kNotEquilateral}, opts);
}

CheckReport check_chain_theorems(const Algebra& alg, const CheckOptions& opts) {
  ReportBuilder r("chain_theorems", opts.witness_cap);
  const auto n = static_cast<Elem>(alg.size());
  std::optional<std::pair<Elem, Elem>> incomparable;
  for (Elem a = 0; a < n && !incomparable; ++a)
    for (Elem b = a + 1; b < n && !incomparable; ++b)
      if (alg.le(a, b) == Truth::no && alg.le(b, a) == Truth::no) incomparable = {a, b};
  const bool chain = !incomparable;

  std::vector<std::vector<Elem>> fixty;
  bool all_isosceles = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c) {
        r.pass();
        if (fixty3(alg, a, b, c) == Truth::yes) fixty.push_back({a, b, c});
        const Elem x = alg.star(a, b), y = alg.star(b, c), z = alg.star(c, a);
        if (x != kUndefined && y != kUndefined && z != kUndefined && x != y && y != z && x != z)
          all_isosceles = false;
      }

  if (chain) {
    for (auto& t : fixty) r.fail("chain_has_fixty", t);
  } else {
    const std::vector<Elem> pair{incomparable->first, incomparable->second};
    if (fixty.empty()) r.fail("non_chain_fixty_free", pair);
    if (all_isosceles) r.fail("non_chain_all_isosceles", pair);
  }
  auto report = std::move(r).finish();
  report.details["is_chain"] = chain ? "true" : "false";
  report.details["fixty_triangles"] = std::to_string(fixty.size());
  report.details["all_isosceles"] = all_isosceles ? "true" : "false";
  return report;
}

CheckReport check_t1(const Algebra& alg, const CheckOptions& opts) {
  const std::array<const Law*, 1> l{&kT1};
  return check_laws(alg, "t1", l, opts);
}

CheckReport check_t2(const Algebra& alg, const CheckOptions& opts) {
  const std::array<const Law*, 1> l{&kT2};
  return check_laws(alg, "t2", l, opts);
}

CheckReport check_beta(const Algebra& alg, const CheckOptions& opts) {
  const std::array<const Law*, 1> l{&kBeta};
  return check_laws(alg, "beta", l, opts);
}

CheckReport check_quadrilateral_lemma(const Algebra& alg, const CheckOptions& opts) {
  const std::array<const Law*, 3> l{&kQuadIdentity, &kQuadCorollary, &kQuadMonotone};
  return check_laws(alg, "quadrilateral_lemma", l, opts);
}

CheckReport check_lattice_implies_metric(const Algebra& alg, const CheckOptions& opts) {
  const std::array<const Law*, 1> l{&kLImpliesM};
  return check_laws(alg, "lattice_implies_metric", l, opts);
}

CheckReport check_ptolemaic(const Algebra& alg, const CheckOptions& opts) {
  const std::array<const Law*, 3> l{&kPtolemy1, &kPtolemy2, &kPtolemy3};
  return check_laws(alg, "ptolemaic", l, opts);
}

CheckReport check_b_implies_d(const Algebra& alg, const CheckOptions& opts) {
  ReportBuilder r("b_implies_d", opts.witness_cap);
  const auto n = static_cast<Elem>(alg.size());
  for (unsigned k : {3u, 4u}) {
    for (const auto& s : subsets(n, k)) {
      auto b = search_labelings(s, [&](const std::vector<Elem>& p) {
        return b_linear_labeling(alg, p, Betweenness::metric);
      });
      auto d = search_labelings(s, [&](const std::vector<Elem>& p) {
        return d_linear_labeling(alg, p);
      });
      r.record("b_implies_d", implies(b.first, d.first), s);
    }
  }
  return std::move(r).finish();
}

CheckReport is_metrically_convex(const Algebra& alg, const CheckOptions& opts) {
  ReportBuilder r("metrically_convex", opts.witness_cap);
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      Truth found = Truth::no;
      for (Elem x = 0; x < n && found != Truth::yes; ++x) {
        if (x == a || x == b) continue;
        Truth t = metric_between3(alg, a, x, b);
        if (t == Truth::yes)
          found = Truth::yes;
        else if (t == Truth::unknown)
          found = Truth::unknown;
      }
      r.record("between_point_exists", found, {a, b});
    }
  return std::move(r).finish();
}

CheckReport check_four_way_equivalence(const Algebra& alg, const CheckOptions& opts) {
  const std::array<const Law*, 1> agree{&kBetweennessAgree};
  const std::array<const Law*, 1> stated{&kCond3Stated};
  const std::array<const Law*, 1> argued{&kCond3Argued};
  const CheckOptions one{1, false};
  const std::array<CheckReport, 5> parts{
      check_laws(alg, "cond1_betweenness_agree", agree, one), check_t1(alg, one),
      check_laws(alg, "cond3_stated", stated, one), check_laws(alg, "cond3_argued", argued, one),
      check_beta(alg, one)};
  const bool c1 = parts[0].passed, c2 = parts[1].passed, c3s = parts[2].passed,
             c3a = parts[3].passed, c4 = parts[4].passed;
  const bool ok = c1 == c2 && c2 == c4 && (c3s == c1 || c3a == c1);

  ReportBuilder r("four_way_equivalence", opts.witness_cap);
  for (const auto& p : parts) r.tally(p.checked, p.skipped);
  if (!ok)
    for (const auto& p : parts)
      if (!p.passed) r.fail(p.name + ":" + p.witnesses.front().law, p.witnesses.front().tuple);
  auto report = std::move(r).finish();
  auto flag = [](bool b) { return b ? "true" : "false"; };
  report.details["cond1_betweenness_agree"] = flag(c1);
  report.details["cond2_t1"] = flag(c2);
  report.details["cond3_stated"] = flag(c3s);
  report.details["cond3_argued"] = flag(c3a);
  report.details["cond4_beta"] = flag(c4);
  return report;
}

bool TheoremSuiteReport::all_theorems_passed() const {
  return std::all_of(theorems.begin(), theorems.end(),
                     [](const CheckReport& r) { return r.passed; });
}

const CheckReport* TheoremSuiteReport::find(std::string_view name) const {
  for (const auto* list : {&theorems, &predicates, &findings})
    for (const auto& r : *list)
      if (r.name == name) return &r;
  return nullptr;
}

TheoremSuiteReport run_theorem_suite(const Algebra& alg, const CheckOptions& opts) {
  TheoremSuiteReport s;
  s.classification = classify(alg, opts);

  CheckReport t1 = check_t1(alg, opts);
  CheckReport t2 = check_t2(alg, opts);
  CheckReport beta = check_beta(alg, opts);
  CheckReport ptolemaic = check_ptolemaic(alg, opts);
  CheckReport convex = is_metrically_convex(alg, opts);

  s.is_chain = is_chain(alg);
  s.has_t1 = t1.passed;
  s.has_t2 = t2.passed;
  s.has_beta = beta.passed;
  s.is_ptolemaic = ptolemaic.passed;
  s.is_metrically_convex = convex.passed;

  if (s.classification.al_monoid) {
    s.theorems_skipped = false;
    s.theorems = {fixty_equivalence_check(alg, opts),
                  check_no_equilateral(alg, opts),
                  check_chain_theorems(alg, opts),
                  t2,
                  check_lattice_implies_metric(alg, opts),
                  check_quadrilateral_lemma(alg, opts),
                  ptolemaic,
                  check_b_implies_d(alg, opts),
                  check_four_way_equivalence(alg, opts)};
    s.findings = {check_star_monotone(alg, opts)};
  }
  s.predicates = {std::move(t1), std::move(t2), std::move(beta), std::move(ptolemaic),
                  std::move(convex)};
  return s;
}

}  // namespace almg
