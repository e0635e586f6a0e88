#include "almg/intervals.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace almg {

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
      throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

IntervalSet IntervalSet::from(std::vector<Interval> intervals) {
  for (const auto& iv : intervals)
    if (iv.lo > iv.hi)
      throw std::invalid_argument("interval [" + almg::to_string(iv.lo) + "," +
                                  almg::to_string(iv.hi) + "] has lo > hi");
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet s;
  for (const auto& iv : intervals) {
    if (!s.parts_.empty() && iv.lo <= s.parts_.back().hi)
      s.parts_.back().hi = std::max(s.parts_.back().hi, iv.hi);
    else
      s.parts_.push_back(iv);
  }
  return s;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return x <= it->hi;
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (const auto& iv : parts_) {
    if (!out.empty()) out += '+';
    out += "[" + almg::to_string(iv.lo) + "," + almg::to_string(iv.hi) + "]";
  }
  return out;
}

IntervalSet parse_interval_set(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "{}" || s == "empty") return {};
  std::vector<Interval> parts;
  std::size_t i = 0;
  while (true) {
    if (i >= s.size() || s[i] != '[')
      throw std::invalid_argument("expected '[' at position " + std::to_string(i) + " in '" +
                                  std::string(text) + "'");
    auto comma = s.find(',', i);
    auto close = s.find(']', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("malformed interval in '" + std::string(text) + "'");
    Rational lo = parse_rational(std::string_view(s).substr(i + 1, comma - i - 1));
    Rational hi = parse_rational(std::string_view(s).substr(comma + 1, close - comma - 1));
    parts.push_back({lo, hi});
    i = close + 1;
    if (i == s.size()) break;
    if (s[i] != '+')
      throw std::invalid_argument("expected '+' between intervals in '" + std::string(text) + "'");
    ++i;
  }
  return IntervalSet::from(std::move(parts));
}

namespace {

// The real line cut at the endpoints p_0 < ... < p_{k-1} of both operands:
// membership is constant on each point {p_i} and each open gap (p_i, p_{i+1}).
struct Pieces {
  std::vector<Rational> points;
  std::vector<bool> at_point;  // size k
  std::vector<bool> in_gap;    // size k-1
};

std::vector<Rational> breakpoints(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Rational> pts;
  for (const auto* s : {&a, &b})
    for (const auto& iv : s->intervals()) {
      pts.push_back(iv.lo);
      pts.push_back(iv.hi);
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

template <class Combine>
Pieces combine(const IntervalSet& a, const IntervalSet& b, Combine f) {
  Pieces p;
  p.points = breakpoints(a, b);
  const std::size_t k = p.points.size();
  for (std::size_t i = 0; i < k; ++i)
    p.at_point.push_back(f(a.contains(p.points[i]), b.contains(p.points[i])));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Rational mid = (p.points[i] + p.points[i + 1]) / 2;
    p.in_gap.push_back(f(a.contains(mid), b.contains(mid)));
  }
  return p;
}

// Closure, then reassembly into maximal closed intervals.
IntervalSet closure_of(const Pieces& p) {
  const std::size_t k = p.points.size();
  std::vector<bool> pt(k);
  for (std::size_t i = 0; i < k; ++i)
    pt[i] = p.at_point[i] || (i > 0 && p.in_gap[i - 1]) || (i + 1 < k && p.in_gap[i]);

  std::vector<Interval> out;
  std::size_t i = 0;
  while (i < k) {
    if (!pt[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < k && p.in_gap[j]) ++j;
    out.push_back({p.points[i], p.points[j]});
    i = j + 1;
  }
  return IntervalSet::from(std::move(out));
}

}  // namespace

IntervalSet iv_union(const IntervalSet& a, const IntervalSet& b) {
  return closure_of(combine(a, b, [](bool x, bool y) { return x || y; }));
}

IntervalSet iv_intersect(const IntervalSet& a, const IntervalSet& b) {
  return closure_of(combine(a, b, [](bool x, bool y) { return x && y; }));
}

IntervalSet iv_star(const IntervalSet& a, const IntervalSet& b) {
  return closure_of(combine(a, b, [](bool x, bool y) { return x != y; }));
}

CheckReport demo_axiom4_failure() {
  const auto x = IntervalSet::closed(0, 2);
  const auto y = IntervalSet::closed(2, 3);
  const auto j = iv_union(x, y);
  const auto xs = iv_star(x, j);
  const auto ys = iv_star(y, j);
  const auto w = iv_intersect(xs, ys);

  ReportBuilder r("demo_axiom4_failure", 16);
  // Element numbering: x=0, y=1.
  r.record("axiom4_meet_nonempty", truth(!w.empty()), {0, 1});
  auto report = std::move(r).finish();
  report.details["x"] = x.to_string();
  report.details["y"] = y.to_string();
  report.details["x_star_join"] = xs.to_string();
  report.details["y_star_join"] = ys.to_string();
  report.details["witness"] = w.to_string();
  return report;
}

CheckReport demo_fixty_nonzero_meet() {
  const auto a = IntervalSet::closed(0, 2);
  const auto b = IntervalSet::closed(1, 3);
  const auto c = IntervalSet::from({{0, 1}, {2, 3}});
  const auto ab = iv_star(a, b), bc = iv_star(b, c), ca = iv_star(c, a);
  const auto meet = iv_intersect(iv_intersect(a, b), c);

  ReportBuilder r("demo_fixty_nonzero_meet", 16);
  r.record("A*B=C", truth(ab == c), {0, 1});
  r.record("B*C=A", truth(bc == a), {1, 2});
  r.record("C*A=B", truth(ca == b), {2, 0});
  r.record("meet_nonempty", truth(!meet.empty()), {0, 1, 2});
  auto report = std::move(r).finish();
  report.details["A"] = a.to_string();
  report.details["B"] = b.to_string();
  report.details["C"] = c.to_string();
  report.details["A*B"] = ab.to_string();
  report.details["B*C"] = bc.to_string();
  report.details["C*A"] = ca.to_string();
  report.details["meet"] = meet.to_string();
  return report;
}

CheckReport iv_check_axiom2_sample(const std::vector<std::pair<IntervalSet, IntervalSet>>& pairs,
                                   const CheckOptions& opts) {
  ReportBuilder r("closed_sets_axiom2", opts.witness_cap);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const auto m = iv_intersect(a, b);
    r.record("axiom2_closed_sets", truth(iv_union(iv_star(a, m), m) == a),
             {static_cast<Elem>(i)});
  }
  return std::move(r).finish();
}

}  // namespace almg
