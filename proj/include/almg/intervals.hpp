#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "almg/check_report.hpp"

namespace almg {

/// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Closed interval [lo, hi], lo <= hi. lo == hi is a single point.
struct Interval {
  Rational lo;
  Rational hi;
  bool operator==(const Interval&) const = default;
};

/// A finite union of closed intervals, stored sorted with a strictly positive
/// gap between consecutive intervals. The empty set is the bottom element.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Normalizes: sorts, then merges overlapping or touching intervals.
  /// Throws std::invalid_argument if some lo > hi.
  static IntervalSet from(std::vector<Interval> intervals);
  static IntervalSet closed(Rational lo, Rational hi) { return from({{lo, hi}}); }
  static IntervalSet point(Rational x) { return from({{x, x}}); }

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;

  /// `[0,1]+[2,3]`; the empty set prints as `{}`.
  std::string to_string() const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

/// Parses `[0,2]+[5/2,3]`; `{}` or `empty` denotes the empty set.
IntervalSet parse_interval_set(std::string_view text);

IntervalSet iv_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet iv_intersect(const IntervalSet& a, const IntervalSet& b);
/// Topological closure of the symmetric difference.
IntervalSet iv_star(const IntervalSet& a, const IntervalSet& b);

/// x = [0,2], y = [2,3]: (x*(x v y)) ^ (y*(x v y)) is nonempty. The witness
/// set is in details["witness"].
CheckReport demo_axiom4_failure();

/// A = [0,2], B = [1,3], C = [0,1]+[2,3]: the triangle has fixty while
/// A ^ B ^ C is nonempty. Elements are numbered A=0, B=1, C=2 in witnesses.
CheckReport demo_fixty_nonzero_meet();

/// a*(a^b) + (a^b) = a with + as union, for each supplied pair. Witness
/// tuples hold the index of the failing pair.
CheckReport iv_check_axiom2_sample(
    const std::vector<std::pair<IntervalSet, IntervalSet>>& pairs,
    const CheckOptions& opts = {});

}  // namespace almg
