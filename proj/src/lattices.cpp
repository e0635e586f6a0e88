#include <set>
#include <stdexcept>

#include "almg/search.hpp"

namespace almg {
namespace {

// le is an n*n reflexive partial order; fills join/meet or returns false.
bool lattice_from_order(std::size_t n, const std::vector<bool>& le, LatticeTables& out) {
  out.size = n;
  out.join.assign(n * n, kUndefined);
  out.meet.assign(n * n, kUndefined);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // Least upper bound and greatest lower bound, if they exist.
      Elem lub = kUndefined, glb = kUndefined;
      for (std::size_t c = 0; c < n; ++c) {
        if (le[a * n + c] && le[b * n + c]) {
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d)
            if (le[a * n + d] && le[b * n + d] && !le[c * n + d]) least = false;
          if (least) lub = static_cast<Elem>(c);
        }
        if (le[c * n + a] && le[c * n + b]) {
          bool greatest = true;
          for (std::size_t d = 0; d < n && greatest; ++d)
            if (le[d * n + a] && le[d * n + b] && !le[d * n + c]) greatest = false;
          if (greatest) glb = static_cast<Elem>(c);
        }
      }
      if (lub == kUndefined || glb == kUndefined) return false;
      out.join[a * n + b] = lub;
      out.meet[a * n + b] = glb;
    }
  return true;
}

}  // namespace

std::vector<LatticeTables> enumerate_lattice_orders(std::size_t n, bool dedup) {
  if (n < 1 || n > 5) throw std::invalid_argument("lattice enumeration supports 1 <= n <= 5");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  // Each unordered pair is incomparable, i < j or j < i.
  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;

  std::vector<LatticeTables> out;
  std::set<std::string> seen;
  std::vector<bool> le(n * n);
  for (std::size_t code = 0; code < total; ++code) {
    std::fill(le.begin(), le.end(), false);
    for (std::size_t i = 0; i < n; ++i) le[i * n + i] = true;
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      const std::size_t s = c % 3;
      c /= 3;
      if (s == 1) le[i * n + j] = true;
      if (s == 2) le[j * n + i] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        if (le[a * n + b])
          for (std::size_t d = 0; d < n; ++d)
            if (le[b * n + d] && !le[a * n + d]) {
              transitive = false;
              break;
            }
    if (!transitive) continue;

    LatticeTables lat;
    if (!lattice_from_order(n, le, lat)) continue;
    if (dedup && !seen.insert(canonical_form(lat)).second) continue;
    out.push_back(std::move(lat));
  }
  return out;
}

}  // namespace almg
