#include "almg/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace almg {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::add: return "add";
    case Op::join: return "join";
    case Op::meet: return "meet";
    case Op::star: return "star";
  }
  return "?";
}

Algebra::Algebra(std::size_t size, Elem zero) : n_(size), zero_(zero) {
  if (size == 0 || size > kMaxCarrier)
    throw std::invalid_argument("carrier size must be in [1, " +
                                std::to_string(kMaxCarrier) + "]");
  if (zero >= size) throw std::invalid_argument("zero is not a carrier element");
  for (auto& t : tables_) t.assign(size * size, kUndefined);
}

Algebra::Algebra(std::size_t size, Elem zero, std::vector<Elem> add,
                 std::vector<Elem> join, std::vector<Elem> meet,
                 std::vector<Elem> star)
    : Algebra(size, zero) {
  std::array<std::vector<Elem>*, 4> src{&add, &join, &meet, &star};
  for (std::size_t k = 0; k < 4; ++k) {
    auto& t = *src[k];
    if (t.size() != size * size)
      throw std::invalid_argument(std::string(op_name(kAllOps[k])) +
                                  " table must have size*size cells");
    for (Elem v : t)
      if (v != kUndefined && v >= size)
        throw std::invalid_argument(std::string(op_name(kAllOps[k])) +
                                    " table entry out of range");
    tables_[k] = std::move(t);
  }
}

void Algebra::set(Op op, Elem a, Elem b, Elem value) {
  require_index(a);
  require_index(b);
  if (value != kUndefined && value >= n_)
    throw std::invalid_argument("table value out of range");
  tables_[static_cast<std::size_t>(op)][std::size_t{a} * n_ + b] = value;
}

bool Algebra::is_partial() const {
  return std::any_of(tables_.begin(), tables_.end(), [](const auto& t) {
    return std::find(t.begin(), t.end(), kUndefined) != t.end();
  });
}

void Algebra::require_index(std::size_t a) const {
  if (a >= n_)
    throw std::out_of_range("element " + std::to_string(a) +
                            " is outside the carrier of size " +
                            std::to_string(n_));
}

bool leq(const Algebra& alg, Elem a, Elem b) {
  alg.require_index(a);
  alg.require_index(b);
  Truth t = alg.le(a, b);
  if (t == Truth::unknown)
    throw std::domain_error("order between " + std::to_string(a) + " and " +
                            std::to_string(b) + " is undefined");
  return t == Truth::yes;
}

bool is_chain(const Algebra& alg) {
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (alg.le(a, b) == Truth::no && alg.le(b, a) == Truth::no) return false;
  return true;
}

}  // namespace almg
