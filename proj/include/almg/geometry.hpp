#pragma once

#include <optional>
#include <span>
#include <vector>

#include "almg/algebra.hpp"
#include "almg/check_report.hpp"
#include "almg/checks.hpp"

namespace almg {

/// Three pairwise-distinct elements, viewed as vertices with sides
/// a*b, b*c and c*a.
class Triangle {
 public:
  /// Throws std::invalid_argument if two vertices coincide.
  Triangle(Elem a, Elem b, Elem c);

  Elem a() const { return a_; }
  Elem b() const { return b_; }
  Elem c() const { return c_; }

  bool operator==(const Triangle&) const = default;

 private:
  Elem a_, b_, c_;
};

// Single predicates. Indices are validated (std::out_of_range); an undefined
// intermediate result raises std::domain_error.

/// a*x + x*b == a*b
bool metric_between(const Algebra& alg, Elem a, Elem x, Elem b);
/// a^c <= b <= a v c
bool lattice_between(const Algebra& alg, Elem a, Elem b, Elem c);
/// a*b == c, b*c == a, c*a == b
bool has_fixty(const Algebra& alg, const Triangle& t);
/// Closed under star.
bool is_subgeometry(const Algebra& alg, std::span<const Elem> subset);

std::optional<Triangle> find_equilateral(const Algebra& alg);
std::vector<Triangle> find_isosceles(const Algebra& alg);
/// Every triangle with fixty, vertices in increasing index order.
std::vector<Triangle> find_fixty_triangles(const Algebra& alg);

/// c > 0 with nothing strictly between 0 and c.
std::vector<Elem> atoms(const Algebra& alg);

enum class Betweenness { metric, lattice };

/// Labelings are searched over all n! orders; tuples must hold 3..6
/// pairwise-distinct elements (std::invalid_argument otherwise).
std::optional<std::vector<Elem>> is_b_linear(
    const Algebra& alg, std::span<const Elem> tuple,
    Betweenness relation = Betweenness::metric);
std::optional<std::vector<Elem>> is_d_linear(const Algebra& alg,
                                             std::span<const Elem> tuple);

// Theorem and property checks over the whole carrier.

CheckReport fixty_equivalence_check(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_no_equilateral(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_chain_theorems(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_t1(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_t2(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_beta(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_quadrilateral_lemma(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_lattice_implies_metric(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_ptolemaic(const Algebra& alg, const CheckOptions& opts = {});
/// B-linear implies D-linear over every 3- and 4-element subset.
CheckReport check_b_implies_d(const Algebra& alg, const CheckOptions& opts = {});
/// Every pair a != b has some x, a != x != b, lying metrically between them.
CheckReport is_metrically_convex(const Algebra& alg, const CheckOptions& opts = {});

/// Evaluates the four conditions
///   (1) lattice and metric betweenness coincide,
///   (2) metric betweenness has t1,
///   (3) a <= b v c and a*b >= a*c imply b <= c   (as stated)
///   (3') a >= b v c and a*b >= a*c imply b <= c  (as used in the argument)
///   (4) the special inner property
/// and passes when (1), (2), (4) agree and at least one reading of (3)
/// agrees with them. Flags are stored in `details`.
CheckReport check_four_way_equivalence(const Algebra& alg, const CheckOptions& opts = {});

struct TheoremSuiteReport {
  Classification classification;
  /// Theorem assertions; empty unless the algebra is an AL-monoid.
  std::vector<CheckReport> theorems;
  /// Predicate evaluations, reported for every algebra.
  std::vector<CheckReport> predicates;
  /// Statements whose failures are findings rather than theorem violations.
  std::vector<CheckReport> findings;

  bool theorems_skipped = true;
  bool is_chain = false;
  bool has_t1 = false;
  bool has_t2 = false;
  bool has_beta = false;
  bool is_ptolemaic = false;
  bool is_metrically_convex = false;

  bool all_theorems_passed() const;
  const CheckReport* find(std::string_view name) const;
};

TheoremSuiteReport run_theorem_suite(const Algebra& alg, const CheckOptions& opts = {});

}  // namespace almg
