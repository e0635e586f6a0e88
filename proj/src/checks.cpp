#include "almg/checks.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "almg/parallel.hpp"
#include "internal.hpp"

namespace almg {

// ---------------------------------------------------------------------------
// ReportBuilder

ReportBuilder::ReportBuilder(std::string name, std::size_t cap)
    : name_(std::move(name)), cap_(std::max<std::size_t>(cap, 1)) {}

void ReportBuilder::record(std::string_view law, Truth t,
                           std::initializer_list<Elem> tuple) {
  record(law, t, std::vector<Elem>(tuple));
}

void ReportBuilder::record(std::string_view law, Truth t,
                           std::vector<Elem> tuple) {
  switch (t) {
    case Truth::yes: ++checked_; break;
    case Truth::unknown: ++skipped_; break;
    case Truth::no: fail(law, std::move(tuple)); break;
  }
}

void ReportBuilder::fail(std::string_view law, std::vector<Elem> tuple) {
  ++checked_;
  ++failures_;
  ++by_law_[std::string(law)];
  witnesses_.push_back(Witness{std::string(law), std::move(tuple)});
  if (cap_ != kUnlimitedWitnesses && witnesses_.size() > 2 * cap_ + 64) trim();
}

void ReportBuilder::trim() {
  std::sort(witnesses_.begin(), witnesses_.end());
  if (witnesses_.size() > cap_) witnesses_.resize(cap_);
}

void ReportBuilder::merge(ReportBuilder&& other) {
  checked_ += other.checked_;
  skipped_ += other.skipped_;
  failures_ += other.failures_;
  for (auto& [law, count] : other.by_law_) by_law_[law] += count;
  for (auto& w : other.witnesses_) witnesses_.push_back(std::move(w));
  if (cap_ != kUnlimitedWitnesses && witnesses_.size() > 2 * cap_ + 64) trim();
}

CheckReport ReportBuilder::finish() && {
  trim();
  CheckReport r;
  r.name = std::move(name_);
  r.checked = checked_;
  r.skipped = skipped_;
  r.failures = failures_;
  r.passed = failures_ == 0;
  r.failures_by_law = std::move(by_law_);
  r.witnesses = std::move(witnesses_);
  return r;
}

CheckReport combine_reports(std::string name,
                            const std::vector<CheckReport>& parts,
                            std::size_t cap) {
  CheckReport out;
  out.name = std::move(name);
  for (const auto& p : parts) {
    out.checked += p.checked;
    out.skipped += p.skipped;
    out.failures += p.failures;
    for (const auto& [law, count] : p.failures_by_law)
      out.failures_by_law[p.name + "." + law] += count;
    for (const auto& w : p.witnesses)
      out.witnesses.push_back(Witness{p.name + "." + w.law, w.tuple});
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  if (out.witnesses.size() > cap) out.witnesses.resize(cap);
  out.passed = out.failures == 0;
  return out;
}

// ---------------------------------------------------------------------------
// Laws

namespace {

constexpr Truth eq(Elem x, Elem y) {
  if (x == kUndefined || y == kUndefined) return Truth::unknown;
  return truth(x == y);
}

#define ALMG_LAW(fn) Truth fn(const Algebra& A, const Elem* t)

ALMG_LAW(join_comm) { return eq(A.join(t[0], t[1]), A.join(t[1], t[0])); }
ALMG_LAW(meet_comm) { return eq(A.meet(t[0], t[1]), A.meet(t[1], t[0])); }
ALMG_LAW(join_idem) { return eq(A.join(t[0], t[0]), t[0]); }
ALMG_LAW(meet_idem) { return eq(A.meet(t[0], t[0]), t[0]); }
ALMG_LAW(join_assoc) {
  return eq(A.join(A.join(t[0], t[1]), t[2]), A.join(t[0], A.join(t[1], t[2])));
}
ALMG_LAW(meet_assoc) {
  return eq(A.meet(A.meet(t[0], t[1]), t[2]), A.meet(t[0], A.meet(t[1], t[2])));
}
ALMG_LAW(absorb_join) { return eq(A.join(t[0], A.meet(t[0], t[1])), t[0]); }
ALMG_LAW(absorb_meet) { return eq(A.meet(t[0], A.join(t[0], t[1])), t[0]); }
ALMG_LAW(order_consistency) {
  return iff(eq(A.meet(t[0], t[1]), t[0]), eq(A.join(t[0], t[1]), t[1]));
}

ALMG_LAW(order_reflexive) { return A.le(t[0], t[0]); }
ALMG_LAW(order_antisymmetric) {
  return implies(A.le(t[0], t[1]) && A.le(t[1], t[0]), truth(t[0] == t[1]));
}

ALMG_LAW(add_comm) { return eq(A.add(t[0], t[1]), A.add(t[1], t[0])); }
ALMG_LAW(add_assoc) {
  return eq(A.add(A.add(t[0], t[1]), t[2]), A.add(t[0], A.add(t[1], t[2])));
}
ALMG_LAW(add_identity) {
  return eq(A.add(A.zero(), t[0]), t[0]) && eq(A.add(t[0], A.zero()), t[0]);
}
ALMG_LAW(add_isotone) {
  const Elem a = t[0], b = t[1], c = t[2];
  return implies(A.le(a, b), A.le(A.add(a, c), A.add(b, c)) &&
                                 A.le(A.add(c, a), A.add(c, b)));
}
ALMG_LAW(add_distrib_join) {
  return eq(A.add(t[0], A.join(t[1], t[2])),
            A.join(A.add(t[0], t[1]), A.add(t[0], t[2])));
}
ALMG_LAW(add_distrib_meet) {
  return eq(A.add(t[0], A.meet(t[1], t[2])),
            A.meet(A.add(t[0], t[1]), A.add(t[0], t[2])));
}

// a*b >= 0, with equality iff a = b.
ALMG_LAW(metric_m1) {
  const Elem s = A.star(t[0], t[1]);
  return A.le(A.zero(), s) && iff(eq(s, A.zero()), truth(t[0] == t[1]));
}
ALMG_LAW(metric_m2) { return eq(A.star(t[0], t[1]), A.star(t[1], t[0])); }
// a*b <= a*c + c*b
ALMG_LAW(metric_m3) {
  const Elem a = t[0], b = t[1], c = t[2];
  return A.le(A.star(a, b), A.add(A.star(a, c), A.star(c, b)));
}

template <Op theta>
ALMG_LAW(contraction) {
  const Elem a = t[0], x = t[1], y = t[2];
  return A.le(A.star(A.apply(theta, a, x), A.apply(theta, a, y)), A.star(x, y));
}

// a*(a^b) + b = a v b
ALMG_LAW(axiom2) {
  const Elem a = t[0], b = t[1];
  return eq(A.add(A.star(a, A.meet(a, b)), b), A.join(a, b));
}
// [a*(a v b)] ^ [b*(a v b)] = 0
ALMG_LAW(axiom4) {
  const Elem a = t[0], b = t[1];
  const Elem j = A.join(a, b);
  return eq(A.meet(A.star(a, j), A.star(b, j)), A.zero());
}
ALMG_LAW(semiregular) {
  return implies(A.le(A.zero(), t[0]), eq(A.star(t[0], A.zero()), t[0]));
}
ALMG_LAW(star_monotone) {
  const Elem a = t[0], b = t[1], c = t[2];
  return implies(A.le(a, b), A.le(A.star(a, c), A.star(b, c)));
}

#undef ALMG_LAW

constexpr Law kJoinComm{"join_comm", 2, join_comm};
constexpr Law kMeetComm{"meet_comm", 2, meet_comm};
constexpr Law kJoinIdem{"join_idem", 1, join_idem};
constexpr Law kMeetIdem{"meet_idem", 1, meet_idem};
constexpr Law kJoinAssoc{"join_assoc", 3, join_assoc};
constexpr Law kMeetAssoc{"meet_assoc", 3, meet_assoc};
constexpr Law kAbsorbJoin{"absorb_join", 2, absorb_join};
constexpr Law kAbsorbMeet{"absorb_meet", 2, absorb_meet};
constexpr Law kOrderConsistency{"order_consistency", 2, order_consistency};
constexpr Law kOrderReflexive{"order_reflexive", 1, order_reflexive};
constexpr Law kOrderAntisymmetric{"order_antisymmetric", 2, order_antisymmetric};
constexpr Law kAddComm{"add_comm", 2, add_comm};
constexpr Law kAddAssoc{"add_assoc", 3, add_assoc};
constexpr Law kAddIdentity{"add_identity", 1, add_identity};
constexpr Law kAddIsotone{"add_isotone", 3, add_isotone};
constexpr Law kAddDistribJoin{"add_distrib_join", 3, add_distrib_join};
constexpr Law kAddDistribMeet{"add_distrib_meet", 3, add_distrib_meet};
constexpr Law kM1{"M1", 2, metric_m1};
constexpr Law kM2{"M2", 2, metric_m2};
constexpr Law kM3{"M3", 3, metric_m3};
constexpr Law kContractAdd{"contract_add", 3, contraction<Op::add>};
constexpr Law kContractJoin{"contract_join", 3, contraction<Op::join>};
constexpr Law kContractMeet{"contract_meet", 3, contraction<Op::meet>};
constexpr Law kContractStar{"contract_star", 3, contraction<Op::star>};
constexpr Law kAxiom2{"axiom2", 2, axiom2};
constexpr Law kAxiom4{"axiom4", 2, axiom4};
constexpr Law kSemiregular{"semiregular", 1, semiregular};
constexpr Law kStarMonotone{"star_monotone", 3, star_monotone};

constexpr std::array<const Law*, 9> kLatticeLaws{
    &kJoinComm, &kMeetComm, &kJoinIdem, &kMeetIdem, &kJoinAssoc,
    &kMeetAssoc, &kAbsorbJoin, &kAbsorbMeet, &kOrderConsistency};
constexpr std::array<const Law*, 2> kOrderLaws{&kOrderReflexive,
                                               &kOrderAntisymmetric};
constexpr std::array<const Law*, 4> kMonoidLaws{&kAddComm, &kAddAssoc,
                                                &kAddIdentity, &kAddIsotone};
constexpr std::array<const Law*, 2> kDistribLaws{&kAddDistribJoin,
                                                 &kAddDistribMeet};
constexpr std::array<const Law*, 3> kMetricLaws{&kM1, &kM2, &kM3};
constexpr std::array<const Law*, 4> kContractionLaws{
    &kContractAdd, &kContractJoin, &kContractMeet, &kContractStar};
constexpr std::array<const Law*, 1> kAxiom2Laws{&kAxiom2};
constexpr std::array<const Law*, 1> kAxiom4Laws{&kAxiom4};
constexpr std::array<const Law*, 1> kSemiregularLaws{&kSemiregular};
constexpr std::array<const Law*, 1> kStarMonotoneLaws{&kStarMonotone};

template <std::size_t N>
void append(std::vector<const Law*>& out, const std::array<const Law*, N>& a) {
  out.insert(out.end(), a.begin(), a.end());
}

// Calls fn(tuple) for every tuple of length k whose first element is `first`.
template <class Fn>
void for_each_tuple(std::size_t n, unsigned k, Elem first, Fn&& fn) {
  std::array<Elem, 8> t{};
  t[0] = first;
  if (k == 1) {
    fn(t.data());
    return;
  }
  for (unsigned i = 1; i < k; ++i) t[i] = 0;
  while (true) {
    fn(t.data());
    unsigned i = k - 1;
    while (true) {
      if (++t[i] < n) break;
      t[i] = 0;
      if (--i == 0) return;
    }
  }
}

}  // namespace

namespace laws {
std::span<const Law* const> lattice() { return kLatticeLaws; }
std::span<const Law* const> order() { return kOrderLaws; }
std::span<const Law* const> monoid() { return kMonoidLaws; }
std::span<const Law* const> distributivity() { return kDistribLaws; }
std::span<const Law* const> metric() { return kMetricLaws; }
std::span<const Law* const> contractions() { return kContractionLaws; }
std::span<const Law* const> axiom2() { return kAxiom2Laws; }
std::span<const Law* const> axiom4() { return kAxiom4Laws; }
std::span<const Law* const> semiregular() { return kSemiregularLaws; }
std::span<const Law* const> star_monotone() { return kStarMonotoneLaws; }
}  // namespace laws

std::vector<const Law*> all_laws() {
  std::vector<const Law*> out;
  append(out, kLatticeLaws);
  append(out, kOrderLaws);
  append(out, kMonoidLaws);
  append(out, kDistribLaws);
  append(out, kMetricLaws);
  append(out, kContractionLaws);
  append(out, kAxiom2Laws);
  append(out, kAxiom4Laws);
  append(out, kSemiregularLaws);
  append(out, kStarMonotoneLaws);
  for (const Law* l : detail::geometry_laws()) out.push_back(l);
  return out;
}

const Law* find_law(std::string_view name) {
  for (const Law* l : all_laws())
    if (l->name == name) return l;
  return nullptr;
}

Truth evaluate_law(const Algebra& alg, std::string_view law,
                   std::span<const Elem> tuple) {
  const Law* l = find_law(law);
  if (!l) throw std::invalid_argument("unknown law '" + std::string(law) + "'");
  if (tuple.size() != l->arity)
    throw std::invalid_argument("law '" + std::string(law) + "' takes " +
                                std::to_string(l->arity) + " elements");
  for (Elem e : tuple) alg.require_index(e);
  return l->eval(alg, tuple.data());
}

CheckReport check_laws(const Algebra& alg, std::string name,
                       std::span<const Law* const> laws,
                       const CheckOptions& opts) {
  const std::size_t n = alg.size();
  std::vector<ReportBuilder> parts;
  const std::size_t chunks = chunk_count(n);
  for (std::size_t c = 0; c < chunks; ++c)
    parts.emplace_back(name, opts.witness_cap);
  parallel_chunks(n, [&](std::size_t c, std::size_t begin, std::size_t end) {
    ReportBuilder& b = parts[c];
    for (std::size_t a = begin; a < end; ++a)
      for (const Law* law : laws)
        for_each_tuple(n, law->arity, static_cast<Elem>(a),
                       [&](const Elem* t) {
                         Truth v = law->eval(alg, t);
                         if (v == Truth::no)
                           b.fail(law->name,
                                  std::vector<Elem>(t, t + law->arity));
                         else if (v == Truth::yes)
                           b.pass();
                         else
                           b.skip();
                       });
  });
  ReportBuilder total(std::move(name), opts.witness_cap);
  for (auto& p : parts) total.merge(std::move(p));
  return std::move(total).finish();
}

bool any_violation(const Algebra& alg, std::span<const Law* const> laws) {
  const std::size_t n = alg.size();
  for (const Law* law : laws) {
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for_each_tuple(n, law->arity, static_cast<Elem>(a), [&](const Elem* t) {
        if (!found && law->eval(alg, t) == Truth::no) found = true;
      });
      if (found) return true;
    }
  }
  return false;
}

CheckReport check_order(const Algebra& alg, const CheckOptions& opts) {
  return check_laws(alg, "order", kOrderLaws, opts);
}
CheckReport check_lattice(const Algebra& alg, const CheckOptions& opts) {
  return check_laws(alg, "lattice", kLatticeLaws, opts);
}
CheckReport check_monoid(const Algebra& alg, const CheckOptions& opts) {
  if (!opts.distributivity) return check_laws(alg, "monoid", kMonoidLaws, opts);
  std::vector<const Law*> all(kMonoidLaws.begin(), kMonoidLaws.end());
  append(all, kDistribLaws);
  return check_laws(alg, "monoid", all, opts);
}
CheckReport check_metric(const Algebra& alg, const CheckOptions& opts) {
  return check_laws(alg, "metric", kMetricLaws, opts);
}
CheckReport check_contractions(const Algebra& alg, const CheckOptions& opts) {
  return check_laws(alg, "contractions", kContractionLaws, opts);
}
CheckReport check_axiom2(const Algebra& alg, const CheckOptions& opts) {
  return check_laws(alg, "axiom2", kAxiom2Laws, opts);
}
CheckReport check_axiom4(const Algebra& alg, const CheckOptions& opts) {
  return check_laws(alg, "axiom4", kAxiom4Laws, opts);
}
CheckReport check_semiregular(const Algebra& alg, const CheckOptions& opts) {
  return check_laws(alg, "semiregular", kSemiregularLaws, opts);
}
CheckReport check_star_monotone(const Algebra& alg, const CheckOptions& opts) {
  return check_laws(alg, "star_monotone", kStarMonotoneLaws, opts);
}

// ---------------------------------------------------------------------------
// Classification

const CheckReport* Classification::find(std::string_view name) const {
  for (const auto& r : reports)
    if (r.name == name) return &r;
  return nullptr;
}

Classification classify(const Algebra& alg, const CheckOptions& opts) {
  Classification c;
  c.reports = {check_order(alg, opts),    check_lattice(alg, opts),
               check_monoid(alg, opts),   check_metric(alg, opts),
               check_contractions(alg, opts), check_axiom2(alg, opts),
               check_axiom4(alg, opts),   check_semiregular(alg, opts)};
  auto ok = [&](std::string_view name) { return c.find(name)->passed; };
  const CheckReport& monoid = *c.find("monoid");
  auto law_ok = [&](const char* law) {
    return !monoid.failures_by_law.contains(law);
  };

  c.autometrized = ok("order") && ok("metric") && law_ok("add_comm") &&
                   law_ok("add_identity");
  c.lattice_ordered = ok("lattice") && ok("monoid") && ok("metric");
  c.semiregular = c.autometrized && ok("semiregular");
  c.representable = c.lattice_ordered && ok("semiregular") && ok("contractions");
  c.al_monoid = ok("lattice") && ok("monoid") && ok("metric") &&
                ok("axiom2") && ok("contractions") && ok("axiom4");
  return c;
}

// ---------------------------------------------------------------------------
// Least differences

std::optional<Elem> drl_difference(const Algebra& alg, Elem a, Elem b) {
  alg.require_index(a);
  alg.require_index(b);
  const auto n = static_cast<Elem>(alg.size());
  std::vector<Elem> candidates;
  for (Elem x = 0; x < n; ++x)
    if (alg.le(a, alg.add(b, x)) == Truth::yes) candidates.push_back(x);
  for (Elem c : candidates) {
    bool least = std::all_of(candidates.begin(), candidates.end(),
                             [&](Elem y) { return alg.le(c, y) == Truth::yes; });
    if (least) return c;
  }
  return std::nullopt;
}

CheckReport is_drl_compatible(const Algebra& alg, const CheckOptions& opts) {
  const auto n = static_cast<Elem>(alg.size());
  std::vector<std::optional<Elem>> diff(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) diff[std::size_t{a} * n + b] = drl_difference(alg, a, b);

  ReportBuilder r("drl_compatible", opts.witness_cap);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const auto& ab = diff[std::size_t{a} * n + b];
      const auto& ba = diff[std::size_t{b} * n + a];
      if (!ab || !ba) {
        r.fail("difference_absent", {a, b});
        continue;
      }
      r.record("star_is_symmetric_difference",
               eq(alg.star(a, b), alg.join(*ab, *ba)), {a, b});
    }
  }
  return std::move(r).finish();
}

}  // namespace almg
