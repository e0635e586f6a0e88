#include <doctest.h>

#include <algorithm>

#include "almg/geometry.hpp"
#include "almg/models.hpp"
#include "almg/search.hpp"
#include "oracles.hpp"

using namespace almg;

namespace {

const Algebra& b2() {
  static const Algebra a = make_boolean(2);
  return a;
}

Algebra chain3() { return make_chain(3, ChainMode::truncated); }

const std::vector<Algebra>& small_al_monoids() {
  static const std::vector<Algebra> all = [] {
    std::vector<Algebra> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto r = enumerate_al_monoids(n);
      out.insert(out.end(), r.algebras.begin(), r.algebras.end());
    }
    return out;
  }();
  return all;
}

std::string flag(const CheckReport& r, const std::string& key) { return r.details.at(key); }

}  // namespace

TEST_CASE("triangles need distinct vertices") {
  CHECK_THROWS_AS(Triangle(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Triangle(1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Triangle(2, 1, 1), std::invalid_argument);
  CHECK_NOTHROW(Triangle(0, 1, 2));
}

TEST_CASE("metric betweenness examples") {
  CHECK(metric_between(b2(), 1, 3, 2));
  CHECK(metric_between(b2(), 1, 0, 2));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(metric_between(b2(), a, a, b));
  // XOR/OR oracle over all triples.
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned x = 0; x < 4; ++x)
      for (unsigned b = 0; b < 4; ++b)
        CHECK(metric_between(b2(), a, x, b) == (((a ^ x) | (x ^ b)) == (a ^ b)));
  CHECK_THROWS_AS(metric_between(b2(), 0, 1, 7), std::out_of_range);
  CHECK_THROWS_AS(metric_between(make_z_window_u(1), 1, 3, 2), std::domain_error);
}

TEST_CASE("lattice betweenness examples") {
  CHECK(lattice_between(b2(), 1, 3, 2));
  CHECK(lattice_between(b2(), 2, 2, 1));
  CHECK_FALSE(lattice_between(chain3(), 0, 2, 1));
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b)
      for (unsigned c = 0; c < 4; ++c)
        CHECK(lattice_between(b2(), a, b, c) ==
              (oracle::Boolean::le(a & c, b) && oracle::Boolean::le(b, a | c)));
}

TEST_CASE("fixty examples") {
  CHECK(has_fixty(b2(), Triangle(1, 2, 3)));
  CHECK_FALSE(has_fixty(b2(), Triangle(0, 1, 2)));
  const Algebra c = chain3();
  CHECK(find_fixty_triangles(c).empty());
  CHECK(find_fixty_triangles(b2()) == std::vector<Triangle>{Triangle(1, 2, 3)});
  CHECK(fixty_equivalence_check(b2()).passed);
  CHECK(fixty_equivalence_check(c).passed);
  // The condition is cyclic.
  for (const auto& alg : small_al_monoids())
    for (const auto& t : find_fixty_triangles(alg)) {
      CHECK(has_fixty(alg, Triangle(t.b(), t.c(), t.a())));
      CHECK(has_fixty(alg, Triangle(t.c(), t.a(), t.b())));
    }
}

TEST_CASE("subgeometries") {
  const std::vector<Elem> all{0, 1, 2, 3}, three{0, 1, 2}, zero{0};
  CHECK(is_subgeometry(b2(), all));
  CHECK_FALSE(is_subgeometry(b2(), three));
  CHECK(is_subgeometry(b2(), zero));
}

TEST_CASE("equilateral and isosceles triangles") {
  CHECK_FALSE(find_equilateral(b2()).has_value());
  Algebra flat = make_boolean(2);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) flat.set(Op::star, a, b, a == b ? 0 : 1);
  CHECK(find_equilateral(flat).has_value());

  CHECK(find_isosceles(make_chain(2, ChainMode::truncated)).empty());
  // B2 brute force: every triangle has sides a^b, b^c, c^a which are distinct.
  std::vector<Triangle> expected;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = a + 1; b < 4; ++b)
      for (unsigned c = b + 1; c < 4; ++c) {
        const unsigned x = a ^ b, y = b ^ c, z = c ^ a;
        if (x == y || y == z || z == x) expected.emplace_back(a, b, c);
      }
  CHECK(find_isosceles(b2()) == expected);
  CHECK(find_isosceles(b2()).empty());
  const auto iso4 = find_isosceles(make_chain(4, ChainMode::truncated));
  CHECK(iso4 == std::vector<Triangle>{Triangle(0, 1, 2), Triangle(1, 2, 3)});
}

TEST_CASE("chain theorems") {
  CHECK(check_chain_theorems(chain3()).passed);
  CHECK(check_chain_theorems(b2()).passed);
}

TEST_CASE("transitivity and the special inner property") {
  CHECK(check_t2(b2()).passed);
  CHECK(check_t2(b2()).checked == 256);
  CHECK(check_t1(chain3()).passed);
  CHECK(check_beta(chain3()).passed);

  // In the 3-chain with + = max the isosceles triangle (0,1,2) has
  // 1*2 = 2 = 0*2 and 2 + 2 = 2 = 2 v 2, so t1 and beta both fail.
  const Algebra m3 = make_chain(3, ChainMode::max);
  const auto t1 = check_t1(m3);
  CHECK_FALSE(t1.passed);
  CHECK(t1.failures == 2);
  CHECK(t1.witnesses[0].tuple == std::vector<Elem>{2, 0, 1, 1});
  CHECK(t1.witnesses[1].tuple == std::vector<Elem>{2, 1, 0, 0});
  const auto beta = check_beta(m3);
  CHECK_FALSE(beta.passed);
  CHECK(beta.witnesses[0].tuple == std::vector<Elem>{2, 0, 1});
  CHECK(beta.witnesses[1].tuple == std::vector<Elem>{2, 1, 0});
  for (const auto& w : beta.witnesses) {
    CHECK(w.tuple[1] != w.tuple[2]);
    CHECK(metric_between(m3, w.tuple[0], w.tuple[1], w.tuple[2]));
    CHECK(metric_between(m3, w.tuple[0], w.tuple[2], w.tuple[1]));
  }
}

TEST_CASE("quadrilateral lemma and lattice betweenness") {
  const Algebra& a = b2();
  CHECK(a.add(a.star(1, 0), a.star(0, 2)) == 3);
  CHECK(a.add(a.star(a.meet(1, 2), 0), a.star(0, a.join(1, 2))) == 3);
  CHECK(metric_between(chain3(), 0, 1, 2));
  CHECK(check_quadrilateral_lemma(a).passed);
  const auto lm = check_lattice_implies_metric(a);
  CHECK(lm.passed);
  CHECK(lm.checked == 64);
}

TEST_CASE("ptolemaic inequality") {
  const Algebra& a = b2();
  // (0*1)^(2*3) <= (0*2)^(1*3) + (0*3)^(1*2)
  CHECK(a.meet(a.star(0, 1), a.star(2, 3)) == 1);
  CHECK(a.add(a.meet(a.star(0, 2), a.star(1, 3)), a.meet(a.star(0, 3), a.star(1, 2))) == 3);
  const auto r = check_ptolemaic(a);
  CHECK(r.passed);
  CHECK(r.checked == 3 * 256);
}

TEST_CASE("linearity") {
  const Algebra c4 = make_chain(4, ChainMode::truncated);
  const std::vector<Elem> four{0, 1, 2, 3};
  const auto bl = is_b_linear(c4, four);
  REQUIRE(bl.has_value());
  CHECK(*bl == four);
  CHECK(is_d_linear(c4, four) == four);

  const std::vector<Elem> t{0, 1, 3};
  const auto d = is_d_linear(b2(), t);
  REQUIRE(d.has_value());
  CHECK(*d == t);
  CHECK(is_b_linear(b2(), t).has_value());

  const std::vector<Elem> rep{0, 1, 1};
  CHECK_THROWS_AS(is_b_linear(b2(), rep), std::invalid_argument);
  CHECK_THROWS_AS(is_d_linear(b2(), rep), std::invalid_argument);
  const std::vector<Elem> two{0, 1};
  CHECK_THROWS_AS(is_d_linear(b2(), two), std::invalid_argument);
  CHECK(check_b_implies_d(b2()).passed);
}

TEST_CASE("convexity and atoms") {
  CHECK_FALSE(is_metrically_convex(make_chain(2, ChainMode::truncated)).passed);
  CHECK(atoms(b2()) == std::vector<Elem>{1, 2});
  CHECK(atoms(chain3()) == std::vector<Elem>{1});

  // Brute force: a pair a != b is convex if some third x lies between them.
  std::vector<std::vector<Elem>> bad;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = a + 1; b < 4; ++b) {
      bool found = false;
      for (unsigned x = 0; x < 4; ++x)
        if (x != a && x != b && ((a ^ x) | (x ^ b)) == (a ^ b)) found = true;
      if (!found) bad.push_back({Elem(a), Elem(b)});
    }
  const auto r = is_metrically_convex(b2(), {kUnlimitedWitnesses});
  CHECK(r.passed == bad.empty());
  std::vector<std::vector<Elem>> got;
  for (const auto& w : r.witnesses) got.push_back(w.tuple);
  CHECK(got == bad);
  CHECK(got == std::vector<std::vector<Elem>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(metric_between(b2(), 0, 1, 3));
  CHECK(is_metrically_convex(chain3()).passed == false);
}

TEST_CASE("four-way equivalence") {
  const auto c = check_four_way_equivalence(chain3());
  CHECK(c.passed);
  CHECK(flag(c, "cond1_betweenness_agree") == "true");
  CHECK(flag(c, "cond2_t1") == "true");
  CHECK(flag(c, "cond4_beta") == "true");
  CHECK(flag(c, "cond3_stated") == "false");
  CHECK(flag(c, "cond3_argued") == "true");
  CHECK(check_four_way_equivalence(b2()).passed);
  const auto m = check_four_way_equivalence(make_chain(3, ChainMode::max));
  CHECK(m.passed);
  CHECK(flag(m, "cond2_t1") == "false");
}

TEST_CASE("theorem suite on standard models") {
  const auto s = run_theorem_suite(b2());
  CHECK(s.classification.al_monoid);
  CHECK_FALSE(s.theorems_skipped);
  CHECK(s.all_theorems_passed());
  CHECK_FALSE(s.is_chain);
  CHECK(s.has_t2);
  CHECK(s.is_ptolemaic);
  CHECK_FALSE(s.is_metrically_convex);

  const auto c = run_theorem_suite(chain3());
  CHECK(c.all_theorems_passed());
  CHECK(c.is_chain);
  CHECK(c.has_t1);
  CHECK(c.has_beta);

  const auto g = run_theorem_suite(make_closed_grid(2));
  CHECK(g.theorems_skipped);
  CHECK(g.theorems.empty());
  CHECK_FALSE(g.predicates.empty());
  CHECK(g.classification.representable);
  CHECK_FALSE(g.classification.al_monoid);
}

TEST_CASE("flags agree with reports") {
  for (const Algebra& a : {b2(), chain3(), make_chain(3, ChainMode::max), make_closed_grid(1)}) {
    const auto s = run_theorem_suite(a);
    CHECK(s.is_chain == is_chain(a));
    CHECK(s.has_t1 == check_t1(a).passed);
    CHECK(s.has_t2 == check_t2(a).passed);
    CHECK(s.has_beta == check_beta(a).passed);
    CHECK(s.is_ptolemaic == check_ptolemaic(a).passed);
    CHECK(s.is_metrically_convex == is_metrically_convex(a).passed);
  }
}

TEST_CASE("every AL-monoid up to size 4 satisfies the theorems") {
  REQUIRE(small_al_monoids().size() == 1 + 1 + 2 + 5);
  for (const auto& a : small_al_monoids()) {
    CHECK_FALSE(find_equilateral(a).has_value());
    const auto s = run_theorem_suite(a);
    CHECK_FALSE(s.theorems_skipped);
    CHECK(s.all_theorems_passed());
    for (const auto& t : s.theorems) CHECK_MESSAGE(t.passed, t.name);
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y)
        for (Elem z = 0; z < a.size(); ++z)
          CHECK(metric_between(a, x, y, z) == metric_between(a, z, y, x));
  }
}

TEST_CASE("AL-monoids of size 5 satisfy the theorems") {
  const auto r = enumerate_al_monoids(5);
  REQUIRE(r.exhausted);
  CHECK(r.algebras.size() == 9);
  for (const auto& a : r.algebras) CHECK(run_theorem_suite(a).all_theorems_passed());
}
