#include "almg/search.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "almg/checks.hpp"
#include "almg/parallel.hpp"

namespace almg {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::lattice: return "lattice";
    case Axiom::monoid: return "monoid";
    case Axiom::metric: return "metric";
    case Axiom::contractions: return "contractions";
    case Axiom::axiom2: return "axiom2";
    case Axiom::axiom4: return "axiom4";
    case Axiom::semiregular: return "semiregular";
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : kAllAxioms)
    if (axiom_name(a) == name) return a;
  throw std::invalid_argument("unknown axiom '" + std::string(name) +
                              "' (expected lattice, monoid, metric, contractions, axiom2, "
                              "axiom4 or semiregular)");
}

CheckReport check_axiom(const Algebra& alg, Axiom a, const CheckOptions& opts) {
  switch (a) {
    case Axiom::lattice: return check_lattice(alg, opts);
    case Axiom::monoid: return check_monoid(alg, opts);
    case Axiom::metric: return check_metric(alg, opts);
    case Axiom::contractions: return check_contractions(alg, opts);
    case Axiom::axiom2: return check_axiom2(alg, opts);
    case Axiom::axiom4: return check_axiom4(alg, opts);
    case Axiom::semiregular: return check_semiregular(alg, opts);
  }
  throw std::logic_error("unhandled axiom");
}

namespace {

std::span<const Law* const> axiom_laws(Axiom a) {
  switch (a) {
    case Axiom::lattice: return laws::lattice();
    case Axiom::monoid: return laws::monoid();
    case Axiom::metric: return laws::metric();
    case Axiom::contractions: return laws::contractions();
    case Axiom::axiom2: return laws::axiom2();
    case Axiom::axiom4: return laws::axiom4();
    case Axiom::semiregular: return laws::semiregular();
  }
  return {};
}

constexpr std::size_t kBatch = 64;

struct Problem {
  std::size_t n;
  std::array<bool, 7> req{};
  std::array<bool, 7> viol{};
  PruneRules prune;
  bool first_only;
  std::vector<const Law*> star_laws;  // required laws that mention *

  bool needs(Axiom a) const { return req[static_cast<std::size_t>(a)]; }
};

// Complete + table for one (lattice, zero); phase 2 fills *.
struct Task {
  Algebra base;
};

struct TaskResult {
  std::vector<Algebra> leaves;
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  bool capped = false;
};

bool leaf_ok(const Problem& p, const Algebra& alg) {
  for (Axiom a : kAllAxioms) {
    const auto i = static_cast<std::size_t>(a);
    if (p.req[i] && any_violation(alg, axiom_laws(a))) return false;
    if (p.viol[i] && !any_violation(alg, axiom_laws(a))) return false;
  }
  return true;
}

class StarSearch {
 public:
  StarSearch(const Problem& p, Algebra alg, std::uint64_t cap)
      : p_(p), alg_(std::move(alg)), cap_(cap) {
    const auto n = static_cast<Elem>(p_.n);
    const bool fix_diag = p_.prune.star_diagonal && p_.needs(Axiom::metric);
    for (Elem a = 0; a < n; ++a) {
      if (fix_diag)
        alg_.set(Op::star, a, a, alg_.zero());
      else
        cells_.push_back({a, a});
      for (Elem b = a + 1; b < n; ++b) cells_.push_back({a, b});
    }
    if (p_.prune.comparable_first)
      std::stable_partition(cells_.begin(), cells_.end(), [&](const auto& c) {
        return c[0] != c[1] && comparable(c[0], c[1]);
      });
  }

  TaskResult run() {
    dfs(0);
    return std::move(out_);
  }

 private:
  bool comparable(Elem a, Elem b) const {
    return alg_.le(a, b) == Truth::yes || alg_.le(b, a) == Truth::yes;
  }

  bool in_domain(Elem a, Elem b, Elem v) const {
    if (a != b && p_.prune.star_positive && p_.needs(Axiom::metric)) {
      if (v == alg_.zero() || alg_.le(alg_.zero(), v) != Truth::yes) return false;
    }
    if (a != b && p_.prune.axiom2_domain && p_.needs(Axiom::axiom2) && comparable(a, b)) {
      const Elem hi = alg_.join(a, b), lo = alg_.meet(a, b);
      if (alg_.add(v, lo) != hi) return false;
    }
    return true;
  }

  bool stop() const { return out_.capped || (p_.first_only && !out_.leaves.empty()); }

  void dfs(std::size_t k) {
    if (stop()) return;
    if (k == cells_.size()) {
      if (leaf_ok(p_, alg_)) out_.leaves.push_back(alg_);
      return;
    }
    const auto [a, b] = cells_[k];
    for (Elem v = 0; v < p_.n; ++v) {
      if (stop()) return;
      if (!in_domain(a, b, v)) {
        ++out_.pruned;
        continue;
      }
      if (++out_.nodes > cap_) {
        out_.capped = true;
        return;
      }
      alg_.set(Op::star, a, b, v);
      alg_.set(Op::star, b, a, v);
      if (p_.prune.star_partial && any_violation(alg_, p_.star_laws)) {
        ++out_.pruned;
      } else {
        dfs(k + 1);
      }
    }
    alg_.set(Op::star, a, b, kUndefined);
    alg_.set(Op::star, b, a, kUndefined);
  }

  const Problem& p_;
  Algebra alg_;
  std::uint64_t cap_;
  std::vector<std::array<Elem, 2>> cells_;
  TaskResult out_;
};

class Driver {
 public:
  Driver(const Problem& p, std::uint64_t budget) : p_(p), budget_(budget) {}

  void run_zero(const LatticeTables& lat, Elem zero) {
    const auto n = static_cast<Elem>(p_.n);
    Algebra alg(p_.n, zero);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        alg.set(Op::join, a, b, lat.join[a * n + b]);
        alg.set(Op::meet, a, b, lat.meet[a * n + b]);
      }
    cells_.clear();
    const bool fix_zero = p_.prune.zero_identity && p_.needs(Axiom::monoid);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) {
        if (fix_zero && (a == zero || b == zero)) {
          const Elem other = a == zero ? b : a;
          alg.set(Op::add, a, b, other);
          alg.set(Op::add, b, a, other);
        } else {
          cells_.push_back({a, b});
        }
      }
    add_dfs(alg, 0);
  }

  void finish() { flush(); }

  bool stopped() const { return stop_; }

  EnumerationResult result(bool dedup) && {
    EnumerationResult r;
    r.nodes = used_;
    r.pruned = pruned_;
    r.exhausted = exhausted_;
    r.found = leaves_.size();
    std::vector<std::pair<std::string, Algebra>> keyed;
    for (auto& a : leaves_) {
      std::string key = canonical_form(a);
      if (!dedup)
        for (Op op : kAllOps)
          for (Elem v : a.table(op)) key += static_cast<char>(v);
      keyed.emplace_back(std::move(key), std::move(a));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (dedup && i > 0 && keyed[i].first == keyed[i - 1].first) {
        ++r.dedup_collapsed;
        continue;
      }
      r.algebras.push_back(std::move(keyed[i].second));
    }
    return r;
  }

 private:
  void add_dfs(Algebra& alg, std::size_t k) {
    if (stop_) return;
    if (k == cells_.size()) {
      pending_.push_back({alg});
      if (pending_.size() == kBatch) flush();
      return;
    }
    const auto [a, b] = cells_[k];
    for (Elem v = 0; v < p_.n && !stop_; ++v) {
      if (++used_ > budget_) {
        stop_ = true;
        exhausted_ = false;
        return;
      }
      alg.set(Op::add, a, b, v);
      alg.set(Op::add, b, a, v);
      if (p_.prune.add_partial && p_.needs(Axiom::monoid) &&
          any_violation(alg, laws::monoid())) {
        ++pruned_;
        continue;
      }
      add_dfs(alg, k + 1);
    }
    alg.set(Op::add, a, b, kUndefined);
    alg.set(Op::add, b, a, kUndefined);
  }

  void flush() {
    if (stop_ || pending_.empty()) {
      pending_.clear();
      return;
    }
    const std::uint64_t cap = budget_ - used_;
    std::vector<TaskResult> results(pending_.size());
    parallel_chunks(pending_.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        results[i] = StarSearch(p_, pending_[i].base, cap).run();
    });
    pending_.clear();

    // Tasks are accounted in order, so the cut point does not depend on how
    // the batch was split across threads.
    for (auto& r : results) {
      if (r.capped || used_ + r.nodes > budget_) {
        stop_ = true;
        exhausted_ = false;
        return;
      }
      used_ += r.nodes;
      pruned_ += r.pruned;
      if (p_.first_only && !r.leaves.empty()) {
        leaves_.push_back(std::move(r.leaves.front()));
        stop_ = true;
        exhausted_ = false;
        return;
      }
      for (auto& leaf : r.leaves) leaves_.push_back(std::move(leaf));
    }
  }

  const Problem& p_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::uint64_t pruned_ = 0;
  bool stop_ = false;
  bool exhausted_ = true;
  std::vector<std::array<Elem, 2>> cells_;
  std::vector<Task> pending_;
  std::vector<Algebra> leaves_;
};

}  // namespace

EnumerationResult search_counterexample(const SearchSpec& spec) {
  if (spec.size < 1 || spec.size > 5)
    throw std::invalid_argument("search size must be in [1, 5]");
  Problem p{spec.size, {}, {}, spec.prune, spec.first_only, {}};
  for (Axiom a : spec.require) p.req[static_cast<std::size_t>(a)] = true;
  for (Axiom a : spec.violate) {
    const auto i = static_cast<std::size_t>(a);
    if (p.req[i])
      throw std::invalid_argument("axiom '" + std::string(axiom_name(a)) +
                                  "' is both required and violated");
    if (a == Axiom::lattice)
      throw std::invalid_argument("the search space consists of lattices; 'lattice' cannot be violated");
    p.viol[i] = true;
  }
  for (Axiom a : {Axiom::metric, Axiom::contractions, Axiom::axiom2, Axiom::axiom4,
                  Axiom::semiregular})
    if (p.needs(a))
      for (const Law* l : axiom_laws(a)) p.star_laws.push_back(l);

  Driver d(p, spec.budget);
  for (const auto& lat : enumerate_lattice_orders(spec.size, spec.dedup)) {
    for (Elem zero = 0; zero < spec.size && !d.stopped(); ++zero) d.run_zero(lat, zero);
    if (d.stopped()) break;
  }
  d.finish();
  return std::move(d).result(spec.dedup);
}

EnumerationResult enumerate_al_monoids(std::size_t n, std::uint64_t budget, bool dedup,
                                       const PruneRules& prune) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumeration supports 1 <= n <= 5");
  SearchSpec s;
  s.size = n;
  s.require = {Axiom::lattice, Axiom::monoid, Axiom::metric, Axiom::contractions, Axiom::axiom2,
               Axiom::axiom4};
  s.budget = budget;
  s.dedup = dedup;
  s.prune = prune;
  return search_counterexample(s);
}

}  // namespace almg
