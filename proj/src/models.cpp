#include "almg/models.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace almg {
namespace {

using Fill = std::function<Elem(Elem, Elem)>;

Algebra tabulate(std::size_t n, Elem zero, const Fill& add, const Fill& join,
                 const Fill& meet, const Fill& star) {
  Algebra alg(n, zero);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      alg.set(Op::add, a, b, add(a, b));
      alg.set(Op::join, a, b, join(a, b));
      alg.set(Op::meet, a, b, meet(a, b));
      alg.set(Op::star, a, b, star(a, b));
    }
  return alg;
}

void require_range(std::string_view what, unsigned value, unsigned lo, unsigned hi) {
  if (value < lo || value > hi)
    throw std::invalid_argument(std::string(what) + " must be in [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "], got " +
                                std::to_string(value));
}

}  // namespace

Algebra make_boolean(unsigned k) {
  require_range("boolean k", k, 0, 4);
  const std::size_t n = std::size_t{1} << k;
  return tabulate(
      n, 0, [](Elem a, Elem b) -> Elem { return a | b; },
      [](Elem a, Elem b) -> Elem { return a | b; },
      [](Elem a, Elem b) -> Elem { return a & b; },
      [](Elem a, Elem b) -> Elem { return a ^ b; });
}

Algebra make_chain(unsigned n, ChainMode mode) {
  require_range("chain n", n, 1, 64);
  auto join = [](Elem a, Elem b) { return std::max(a, b); };
  auto meet = [](Elem a, Elem b) { return std::min(a, b); };
  if (mode == ChainMode::truncated) {
    const Elem top = static_cast<Elem>(n - 1);
    return tabulate(
        n, 0, [top](Elem a, Elem b) { return std::min<Elem>(a + b, top); }, join, meet,
        [](Elem a, Elem b) -> Elem { return a > b ? a - b : b - a; });
  }
  return tabulate(n, 0, join, join, meet,
                  [](Elem a, Elem b) -> Elem { return a == b ? 0 : std::max(a, b); });
}

Elem z_window_u_index(unsigned N, int z) {
  if (z < -static_cast<int>(N) || z > static_cast<int>(N))
    throw std::out_of_range("integer " + std::to_string(z) + " is outside the window");
  return static_cast<Elem>(1 + (z + static_cast<int>(N)));
}

Elem z_window_uv_index(unsigned N, int z) {
  if (z < -static_cast<int>(N) || z > static_cast<int>(N))
    throw std::out_of_range("integer " + std::to_string(z) + " is outside the window");
  return static_cast<Elem>(2 + (z + static_cast<int>(N)));
}

namespace {

// Integer part of a window model: `base` special elements come first.
struct Window {
  int N;
  Elem base;

  bool is_int(Elem e) const { return e >= base; }
  int value(Elem e) const { return static_cast<int>(e - base) - N; }
  Elem index(int z) const {
    if (z < -N || z > N) return kUndefined;
    return static_cast<Elem>(base + (z + N));
  }
  std::size_t size() const { return base + 2 * static_cast<std::size_t>(N) + 1; }
};

}  // namespace

Algebra make_z_window_u(unsigned N, bool u_bottom) {
  require_range("window N", N, 1, 32);
  const Window w{static_cast<int>(N), 1};
  const Elem u = kWindowU;
  const Elem zero = w.index(0);
  auto add = [&](Elem a, Elem b) -> Elem {
    if (a == u || b == u) return u;
    return w.index(w.value(a) + w.value(b));
  };
  auto lattice = [&](bool is_join) {
    return [&, is_join](Elem a, Elem b) -> Elem {
      if (a == u && b == u) return u;
      if (a == u || b == u) {
        if (!u_bottom) return kUndefined;
        const Elem other = a == u ? b : a;
        return is_join ? other : u;
      }
      return is_join ? std::max(a, b) : std::min(a, b);
    };
  };
  auto star = [&](Elem a, Elem b) -> Elem {
    if (a == u && b == u) return zero;
    if (a == u || b == u) return u;
    return w.index(std::abs(w.value(a) - w.value(b)));
  };
  return tabulate(w.size(), zero, add, lattice(true), lattice(false), star);
}

Algebra make_z_window_uv(unsigned N) {
  require_range("window N", N, 1, 32);
  const Window w{static_cast<int>(N), 2};
  const Elem u = kWindowU, v = kWindowV;
  const Elem zero = w.index(0);
  // u < integers < v, so rank gives the chain order.
  auto rank = [&](Elem e) -> long { return e == u ? -1000 : e == v ? 1000 : w.value(e); };
  auto add = [&](Elem a, Elem b) -> Elem {
    if (a == u || b == u) return u;
    if (a == v || b == v) return v;
    return w.index(w.value(a) + w.value(b));
  };
  auto join = [&](Elem a, Elem b) { return rank(a) >= rank(b) ? a : b; };
  auto meet = [&](Elem a, Elem b) { return rank(a) <= rank(b) ? a : b; };
  auto star = [&](Elem a, Elem b) -> Elem {
    if (a == b) return zero;
    if (!w.is_int(a) || !w.is_int(b)) return v;
    return w.index(std::abs(w.value(a) - w.value(b)));
  };
  return tabulate(w.size(), zero, add, join, meet, star);
}

Algebra make_product(const std::vector<Algebra>& factors) {
  if (factors.empty() || factors.size() > 3)
    throw std::invalid_argument("a product needs 1 to 3 factors");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.size();
    if (n > kMaxCarrier)
      throw std::invalid_argument("product carrier exceeds " + std::to_string(kMaxCarrier));
  }

  auto split = [&](Elem e) {
    std::vector<Elem> digits(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      digits[i] = static_cast<Elem>(e % factors[i].size());
      e = static_cast<Elem>(e / factors[i].size());
    }
    return digits;
  };
  auto joint = [&](const std::vector<Elem>& digits) -> Elem {
    std::size_t e = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (digits[i] == kUndefined) return kUndefined;
      e = e * factors[i].size() + digits[i];
    }
    return static_cast<Elem>(e);
  };

  std::vector<Elem> zeros;
  for (const auto& f : factors) zeros.push_back(f.zero());
  Algebra alg(n, joint(zeros));
  for (Elem a = 0; a < n; ++a) {
    const auto da = split(a);
    for (Elem b = 0; b < n; ++b) {
      const auto db = split(b);
      for (Op op : kAllOps) {
        std::vector<Elem> r(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) r[i] = factors[i].at(op, da[i], db[i]);
        alg.set(op, a, b, joint(r));
      }
    }
  }
  return alg;
}

std::vector<IntervalSet> closed_grid_sets(unsigned m) {
  require_range("closed-grid m", m, 1, 5);
  // Bits 0..m are the points, bits m+1..2m the unit segments.
  const unsigned bits = 2 * m + 1;
  std::vector<IntervalSet> sets;
  for (unsigned mask = 0; mask < (1u << bits); ++mask) {
    bool ok = true;
    std::vector<Interval> parts;
    for (unsigned i = 0; i < m && ok; ++i)
      if (mask & (1u << (m + 1 + i))) {
        ok = (mask & (1u << i)) && (mask & (1u << (i + 1)));
        parts.push_back({Rational(i), Rational(i + 1)});
      }
    if (!ok) continue;
    for (unsigned i = 0; i <= m; ++i)
      if (mask & (1u << i)) parts.push_back({Rational(i), Rational(i)});
    sets.push_back(IntervalSet::from(std::move(parts)));
  }
  return sets;
}

Algebra make_closed_grid(unsigned m) {
  const auto sets = closed_grid_sets(m);
  auto index_of = [&](const IntervalSet& s) -> Elem {
    auto it = std::find(sets.begin(), sets.end(), s);
    if (it == sets.end()) throw std::logic_error("closed-grid operation left the family");
    return static_cast<Elem>(it - sets.begin());
  };
  auto lift = [&](IntervalSet (*f)(const IntervalSet&, const IntervalSet&)) {
    return [&, f](Elem a, Elem b) { return index_of(f(sets[a], sets[b])); };
  };
  return tabulate(sets.size(), 0, lift(iv_union), lift(iv_union), lift(iv_intersect),
                  lift(iv_star));
}

namespace {

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto p = s.find(sep);
    out.push_back(s.substr(0, p));
    if (p == std::string_view::npos) break;
    s.remove_prefix(p + 1);
  }
  return out;
}

unsigned parse_param(std::string_view text, std::string_view what) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || p != text.data() + text.size())
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

void validate(const ModelSpec& s) {
  switch (s.family) {
    case Family::boolean: require_range("boolean k", s.param, 0, 4); break;
    case Family::chain: require_range("chain n", s.param, 1, 64); break;
    case Family::z_window_u:
    case Family::z_window_uv: require_range("window N", s.param, 1, 32); break;
    case Family::closed_grid: require_range("closed-grid m", s.param, 1, 5); break;
    case Family::product:
      if (s.factors.empty() || s.factors.size() > 3)
        throw std::invalid_argument("a product needs 1 to 3 factors");
      break;
  }
}

}  // namespace

ModelSpec parse_model_spec(std::string_view text) {
  auto colon = text.find(':');
  const std::string_view family = text.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  ModelSpec s;
  if (family == "product") {
    s.family = Family::product;
    if (rest.empty()) throw std::invalid_argument("product needs factor specs");
    for (auto f : split_on(rest, ',')) {
      auto factor = parse_model_spec(f);
      if (factor.family == Family::product)
        throw std::invalid_argument("nested products are not supported");
      s.factors.push_back(std::move(factor));
    }
    validate(s);
    return s;
  }

  const auto parts = rest.empty() ? std::vector<std::string_view>{} : split_on(rest, ':');
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi)
      throw std::invalid_argument("wrong number of parameters in model spec '" +
                                  std::string(text) + "'");
  };
  if (family == "boolean") {
    need(1, 1);
    s.family = Family::boolean;
    s.param = parse_param(parts[0], "k");
  } else if (family == "chain") {
    need(1, 2);
    s.family = Family::chain;
    s.param = parse_param(parts[0], "n");
    if (parts.size() == 2) {
      if (parts[1] == "truncated")
        s.mode = ChainMode::truncated;
      else if (parts[1] == "max")
        s.mode = ChainMode::max;
      else
        throw std::invalid_argument("chain mode must be 'truncated' or 'max'");
    }
  } else if (family == "z-u") {
    need(0, 2);
    s.family = Family::z_window_u;
    s.param = parts.empty() ? 8 : parse_param(parts[0], "window");
    if (parts.size() == 2) {
      if (parts[1] != "u-bottom") throw std::invalid_argument("unknown z-u flag '" + std::string(parts[1]) + "'");
      s.u_bottom = true;
    }
  } else if (family == "z-uv") {
    need(0, 1);
    s.family = Family::z_window_uv;
    s.param = parts.empty() ? 8 : parse_param(parts[0], "window");
  } else if (family == "closed-grid") {
    need(1, 1);
    s.family = Family::closed_grid;
    s.param = parse_param(parts[0], "m");
  } else {
    throw std::invalid_argument(
        "unknown model family '" + std::string(family) +
        "' (expected boolean, chain, z-u, z-uv, closed-grid or product)");
  }
  validate(s);
  return s;
}

std::string to_string(const ModelSpec& s) {
  switch (s.family) {
    case Family::boolean: return "boolean:" + std::to_string(s.param);
    case Family::chain:
      return "chain:" + std::to_string(s.param) +
             (s.mode == ChainMode::max ? ":max" : ":truncated");
    case Family::z_window_u:
      return "z-u:" + std::to_string(s.param) + (s.u_bottom ? ":u-bottom" : "");
    case Family::z_window_uv: return "z-uv:" + std::to_string(s.param);
    case Family::closed_grid: return "closed-grid:" + std::to_string(s.param);
    case Family::product: {
      std::string out = "product:";
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (i) out += ',';
        out += to_string(s.factors[i]);
      }
      return out;
    }
  }
  return {};
}

Algebra build_model(const ModelSpec& s) {
  validate(s);
  switch (s.family) {
    case Family::boolean: return make_boolean(s.param);
    case Family::chain: return make_chain(s.param, s.mode);
    case Family::z_window_u: return make_z_window_u(s.param, s.u_bottom);
    case Family::z_window_uv: return make_z_window_uv(s.param);
    case Family::closed_grid: return make_closed_grid(s.param);
    case Family::product: {
      std::vector<Algebra> fs;
      for (const auto& f : s.factors) fs.push_back(build_model(f));
      return make_product(fs);
    }
  }
  throw std::logic_error("unhandled model family");
}

std::vector<std::string> element_labels(const ModelSpec& s) {
  validate(s);
  std::vector<std::string> out;
  switch (s.family) {
    case Family::boolean:
      for (unsigned mask = 0; mask < (1u << s.param); ++mask) {
        std::string l = "{";
        for (unsigned i = 0; i < s.param; ++i)
          if (mask & (1u << i)) l += (l.size() > 1 ? "," : "") + std::to_string(i);
        out.push_back(l + "}");
      }
      break;
    case Family::chain:
      for (unsigned i = 0; i < s.param; ++i) out.push_back(std::to_string(i));
      break;
    case Family::z_window_u:
    case Family::z_window_uv: {
      out.push_back("u");
      if (s.family == Family::z_window_uv) out.push_back("v");
      const int N = static_cast<int>(s.param);
      for (int z = -N; z <= N; ++z) out.push_back(std::to_string(z));
      break;
    }
    case Family::closed_grid:
      for (const auto& set : closed_grid_sets(s.param)) out.push_back(set.to_string());
      break;
    case Family::product: {
      std::vector<std::vector<std::string>> fl;
      std::size_t n = 1;
      for (const auto& f : s.factors) {
        fl.push_back(element_labels(f));
        n *= fl.back().size();
      }
      for (std::size_t e = 0; e < n; ++e) {
        std::vector<std::string> parts(fl.size());
        std::size_t rest = e;
        for (std::size_t i = fl.size(); i-- > 0;) {
          parts[i] = fl[i][rest % fl[i].size()];
          rest /= fl[i].size();
        }
        std::string l = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) l += (i ? "," : "") + parts[i];
        out.push_back(l + ")");
      }
      break;
    }
  }
  return out;
}

}  // namespace almg
