#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "almg/search.hpp"

namespace almg {
namespace {

constexpr std::size_t kMaxCanonical = 8;

char encode(Elem v, const std::vector<Elem>& perm) {
  return v == kUndefined ? '\xff' : static_cast<char>(perm[v]);
}

void append_table(std::string& out, std::span<const Elem> table, std::size_t n,
                  const std::vector<Elem>& perm, const std::vector<Elem>& inverse) {
  // Cell (x,y) of the relabeled table is perm(T[inv x][inv y]).
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out += encode(table[inverse[x] * n + inverse[y]], perm);
}

std::vector<Elem> invert(const std::vector<Elem>& perm) {
  std::vector<Elem> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Elem>(i);
  return inv;
}

}  // namespace

std::string canonical_form(const Algebra& alg) {
  const std::size_t n = alg.size();
  if (n > kMaxCanonical)
    throw std::invalid_argument("canonical_form supports carriers of size <= 8");

  // perm[old] = new; zero always maps to 0, the others range over 1..n-1.
  std::vector<Elem> others;
  for (Elem e = 0; e < n; ++e)
    if (e != alg.zero()) others.push_back(e);
  std::vector<Elem> labels(n - 1);
  std::iota(labels.begin(), labels.end(), Elem{1});

  std::string best;
  std::vector<Elem> perm(n);
  perm[alg.zero()] = 0;
  do {
    for (std::size_t i = 0; i < others.size(); ++i) perm[others[i]] = labels[i];
    const auto inv = invert(perm);
    std::string s(1, static_cast<char>(n));
    for (Op op : {Op::join, Op::meet, Op::add, Op::star}) append_table(s, alg.table(op), n, perm, inv);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

std::string canonical_form(const LatticeTables& lat) {
  const std::size_t n = lat.size;
  if (n > kMaxCanonical)
    throw std::invalid_argument("canonical_form supports carriers of size <= 8");
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::string best;
  do {
    const auto inv = invert(perm);
    std::string s(1, static_cast<char>(n));
    append_table(s, lat.join, n, perm, inv);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace almg
