#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "almg/algebra.hpp"
#include "almg/intervals.hpp"

namespace almg {

enum class ChainMode { truncated, max };

/// Subsets of a k-set as bitmasks: + = join = OR, meet = AND, * = XOR.
/// k <= 4.
Algebra make_boolean(unsigned k);

/// 0 < 1 < ... < n-1, 1 <= n <= 64.
/// truncated: a+b = min(a+b, n-1), a*b = |a-b|.
/// max: a+b = a v b, a*b = the larger of the two, or 0 when equal.
Algebra make_chain(unsigned n, ChainMode mode);

/// Integers -N..N plus an extra element u at index 0; integer z sits at
/// index 1 + (z + N). Sums and distances leaving the window are undefined.
/// u absorbs +, a*u = u*a = u, u*u = 0. Without u_bottom the order between
/// u and the integers is left undefined. 1 <= N <= 32.
Algebra make_z_window_u(unsigned N, bool u_bottom = false);

/// Integers -N..N plus u (index 0) and v (index 1) with u < z < v; integer z
/// sits at index 2 + (z + N).
/// + : u and v absorb integers, u+v = u, u+u = u, v+v = v.
/// * : a*u = v = u*a, a*v = v = v*a, u*v = v, u*u = v*v = 0.
Algebra make_z_window_uv(unsigned N);

inline constexpr Elem kWindowU = 0;
inline constexpr Elem kWindowV = 1;
Elem z_window_u_index(unsigned N, int z);
Elem z_window_uv_index(unsigned N, int z);

/// Componentwise product; the first factor is the most significant digit of
/// the element index. At most 3 factors, total size <= kMaxCarrier.
Algebra make_product(const std::vector<Algebra>& factors);

/// Closed subsets of [0,m] built from the grid points 0..m and the unit
/// segments [i,i+1], with join = + = union, meet = intersection and
/// * = closure of the symmetric difference. Index 0 is the empty set.
/// 1 <= m <= 5.
Algebra make_closed_grid(unsigned m);
/// The sets behind make_closed_grid(m), by index.
std::vector<IntervalSet> closed_grid_sets(unsigned m);

enum class Family { boolean, chain, z_window_u, z_window_uv, product, closed_grid };

struct ModelSpec {
  Family family = Family::boolean;
  unsigned param = 0;  // k, n, N or m
  ChainMode mode = ChainMode::truncated;
  bool u_bottom = false;
  std::vector<ModelSpec> factors;

  bool operator==(const ModelSpec&) const = default;
};

/// Text form, e.g. `boolean:2`, `chain:3:max`, `z-u:8:u-bottom`, `z-uv:8`,
/// `closed-grid:2`, `product:boolean:2,chain:2`. Throws
/// std::invalid_argument on malformed or out-of-bound parameters.
ModelSpec parse_model_spec(std::string_view text);
std::string to_string(const ModelSpec& spec);

Algebra build_model(const ModelSpec& spec);

/// Human-readable names for the elements, by index.
std::vector<std::string> element_labels(const ModelSpec& spec);

}  // namespace almg
