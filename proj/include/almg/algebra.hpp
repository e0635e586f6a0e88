#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace almg {

/// Index of a carrier element.
using Elem = std::uint16_t;

/// Table cell marker for an undefined operation result (windowed models).
inline constexpr Elem kUndefined = 0xFFFF;

/// Largest carrier an Algebra may hold.
inline constexpr std::size_t kMaxCarrier = 4096;

enum class Op : std::uint8_t { add, join, meet, star };

inline constexpr std::array<Op, 4> kAllOps{Op::add, Op::join, Op::meet, Op::star};

std::string_view op_name(Op op);

/// Three-valued outcome of evaluating a condition on a possibly partial
/// algebra. `unknown` means some intermediate result was undefined.
enum class Truth : std::uint8_t { no, yes, unknown };

constexpr Truth truth(bool b) { return b ? Truth::yes : Truth::no; }

// Strict connectives: any unknown operand makes the result unknown.
constexpr Truth operator&&(Truth a, Truth b) {
  if (a == Truth::unknown || b == Truth::unknown) return Truth::unknown;
  return truth(a == Truth::yes && b == Truth::yes);
}
constexpr Truth operator||(Truth a, Truth b) {
  if (a == Truth::unknown || b == Truth::unknown) return Truth::unknown;
  return truth(a == Truth::yes || b == Truth::yes);
}
constexpr Truth operator!(Truth a) {
  return a == Truth::unknown ? Truth::unknown : truth(a == Truth::no);
}
constexpr Truth implies(Truth a, Truth b) { return !a || b; }
constexpr Truth iff(Truth a, Truth b) {
  if (a == Truth::unknown || b == Truth::unknown) return Truth::unknown;
  return truth(a == b);
}

/// A carrier of `size()` elements with four binary operation tables and a
/// designated zero. Cells may hold kUndefined, in which case the value is a
/// windowed (partial) view of an infinite algebra.
///
/// The order is not stored: a <= b iff meet(a,b) == a.
class Algebra {
 public:
  Algebra() = default;
  /// All cells start undefined.
  Algebra(std::size_t size, Elem zero);
  Algebra(std::size_t size, Elem zero, std::vector<Elem> add,
          std::vector<Elem> join, std::vector<Elem> meet,
          std::vector<Elem> star);

  std::size_t size() const { return n_; }
  Elem zero() const { return zero_; }

  /// Raw cell. Preconditions: a, b < size().
  Elem at(Op op, Elem a, Elem b) const {
    return tables_[static_cast<std::size_t>(op)][std::size_t{a} * n_ + b];
  }

  /// Cell lookup that propagates kUndefined through its arguments.
  Elem apply(Op op, Elem a, Elem b) const {
    if (a == kUndefined || b == kUndefined) return kUndefined;
    return at(op, a, b);
  }

  Elem add(Elem a, Elem b) const { return apply(Op::add, a, b); }
  Elem join(Elem a, Elem b) const { return apply(Op::join, a, b); }
  Elem meet(Elem a, Elem b) const { return apply(Op::meet, a, b); }
  Elem star(Elem a, Elem b) const { return apply(Op::star, a, b); }

  /// Derived order, strict about undefined cells.
  Truth le(Elem a, Elem b) const {
    Elem m = meet(a, b);
    if (m == kUndefined) return Truth::unknown;
    return truth(m == a);
  }

  /// Throws std::out_of_range for a bad index and std::invalid_argument for a
  /// value outside [0,size) other than kUndefined.
  void set(Op op, Elem a, Elem b, Elem value);

  std::span<const Elem> table(Op op) const {
    return tables_[static_cast<std::size_t>(op)];
  }

  bool is_partial() const;

  /// Throws std::out_of_range unless a < size().
  void require_index(std::size_t a) const;

  bool operator==(const Algebra&) const = default;

 private:
  std::size_t n_ = 0;
  Elem zero_ = 0;
  std::array<std::vector<Elem>, 4> tables_;
};

/// Public order predicate. Throws std::out_of_range for a bad index and
/// std::domain_error when meet(a,b) is undefined.
bool leq(const Algebra& alg, Elem a, Elem b);

/// Total order check on the derived relation, over defined pairs.
bool is_chain(const Algebra& alg);

}  // namespace almg
