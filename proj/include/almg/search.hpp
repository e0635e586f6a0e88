#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "almg/algebra.hpp"
#include "almg/check_report.hpp"

namespace almg {

enum class Axiom { lattice, monoid, metric, contractions, axiom2, axiom4, semiregular };

inline constexpr Axiom kAllAxioms[] = {Axiom::lattice,      Axiom::monoid, Axiom::metric,
                                       Axiom::contractions, Axiom::axiom2, Axiom::axiom4,
                                       Axiom::semiregular};

std::string_view axiom_name(Axiom a);
/// Throws std::invalid_argument for an unknown name.
Axiom parse_axiom(std::string_view name);
/// The algebra-core check behind an axiom identifier.
CheckReport check_axiom(const Algebra& alg, Axiom a, const CheckOptions& opts = {});

struct LatticeTables {
  std::size_t size = 0;
  std::vector<Elem> join;
  std::vector<Elem> meet;
};

/// All lattices on {0..n-1}, from the partial orders with all binary joins
/// and meets. With dedup, one representative per isomorphism class. n <= 5.
std::vector<LatticeTables> enumerate_lattice_orders(std::size_t n, bool dedup = true);

/// Individually switchable filters. Each is sound: turning one off may only
/// cost nodes, never change the emitted set.
struct PruneRules {
  bool zero_identity = true;    // fix zero + x = x when monoid is required
  bool add_partial = true;      // monoid laws on the partial + table
  bool star_diagonal = true;    // a*a = 0 when metric is required
  bool star_positive = true;    // a*b != 0 and a*b >= 0 for a != b, metric required
  bool axiom2_domain = true;    // a > b forces a*b + b = a, axiom2 required
  bool star_partial = true;     // required laws on the partial * table
  bool comparable_first = true; // cell order heuristic, not a filter

  bool operator==(const PruneRules&) const = default;
};

struct SearchSpec {
  std::size_t size = 3;  // 1..5
  std::vector<Axiom> require;
  std::vector<Axiom> violate;
  std::uint64_t budget = 100'000'000;
  bool dedup = true;
  bool first_only = false;
  PruneRules prune;
};

struct EnumerationResult {
  std::vector<Algebra> algebras;  // sorted by canonical form
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t found = 0;            // leaves passing require/violate
  std::uint64_t dedup_collapsed = 0;  // of those, dropped as isomorphic
  bool exhausted = true;              // false when the budget cut the search
};

/// Backtracking over lattice, zero, symmetric + table and symmetric * table.
/// Leaves are re-verified with the algebra-core checks. Throws
/// std::invalid_argument for a bad spec (overlapping axiom sets, size out of
/// range, or `lattice` in violate: the search space consists of lattices).
EnumerationResult search_counterexample(const SearchSpec& spec);

/// All AL-monoids of size n (lattice, monoid, metric, contractions, axiom2,
/// axiom4).
EnumerationResult enumerate_al_monoids(std::size_t n, std::uint64_t budget = 100'000'000,
                                       bool dedup = true, const PruneRules& prune = {});

/// Minimum over zero-fixing relabelings of the serialized tables; equal
/// forms iff isomorphic as zero-pointed algebras. Size <= 8.
std::string canonical_form(const Algebra& alg);
/// Same idea for bare lattices (join table only).
std::string canonical_form(const LatticeTables& lat);

}  // namespace almg
