#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "almg/algebra.hpp"
#include "almg/check_report.hpp"

namespace almg {

/// A universally quantified condition over `arity` carrier elements.
struct Law {
  std::string_view name;
  unsigned arity;
  Truth (*eval)(const Algebra&, const Elem*);
};

/// Every registered law, structural and geometric.
std::vector<const Law*> all_laws();
const Law* find_law(std::string_view name);

/// Re-evaluates one named law on one instance. Throws std::invalid_argument
/// for an unknown law or a tuple of the wrong length.
Truth evaluate_law(const Algebra& alg, std::string_view law,
                   std::span<const Elem> tuple);

/// Runs each law over all size()^arity tuples. Instances that touch an
/// undefined cell are counted as skipped.
CheckReport check_laws(const Algebra& alg, std::string name,
                       std::span<const Law* const> laws,
                       const CheckOptions& opts = {});

/// True if some instance of any law is definitely false. Used for pruning.
bool any_violation(const Algebra& alg, std::span<const Law* const> laws);

// Structural checks. Each quantifies over all tuples of its laws.
CheckReport check_order(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_lattice(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_monoid(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_metric(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_contractions(const Algebra& alg,
                               const CheckOptions& opts = {});
CheckReport check_axiom2(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_axiom4(const Algebra& alg, const CheckOptions& opts = {});
CheckReport check_semiregular(const Algebra& alg,
                              const CheckOptions& opts = {});

/// a <= b implies a*c <= b*c. Reported as a finding; the statement is not
/// part of any classification.
CheckReport check_star_monotone(const Algebra& alg,
                                const CheckOptions& opts = {});

struct Classification {
  bool autometrized = false;
  bool lattice_ordered = false;  // lattice-ordered autometrized algebra
  bool semiregular = false;
  bool representable = false;
  bool al_monoid = false;
  std::vector<CheckReport> reports;

  const CheckReport* find(std::string_view name) const;
};

Classification classify(const Algebra& alg, const CheckOptions& opts = {});

/// Least x with b + x >= a, if the set of such x has a least element.
std::optional<Elem> drl_difference(const Algebra& alg, Elem a, Elem b);

/// star(a,b) == (a-b) v (b-a) for every pair, all differences existing.
CheckReport is_drl_compatible(const Algebra& alg,
                              const CheckOptions& opts = {});

namespace laws {
// Law groups, exposed for the search engine's partial-table pruning.
std::span<const Law* const> lattice();
std::span<const Law* const> order();
std::span<const Law* const> monoid();
std::span<const Law* const> distributivity();
std::span<const Law* const> metric();
std::span<const Law* const> contractions();
std::span<const Law* const> axiom2();
std::span<const Law* const> axiom4();
std::span<const Law* const> semiregular();
std::span<const Law* const> star_monotone();
}  // namespace laws

}  // namespace almg
