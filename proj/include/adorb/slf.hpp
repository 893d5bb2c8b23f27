#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adorb/hodge.hpp"
#include "adorb/weyl.hpp"

namespace adorb {

/**
 * Full invariant report of the Lefschetz fibration attached to a pair
 * (H0, H): the height function f_H(x) = <H, x> on the adjoint orbit of H0
 * has critical set W.H0, critical values <H, w.H0>, and its regular fiber
 * has the homology of (G/P_Theta) minus k points.
 */
struct SlfReport {
  CartanType cartan_type{};
  CartanVector h0;
  CartanVector h;

  bool h_regular = false;
  std::optional<RootCoords> vanishing_root;  // witness when h_regular is false

  ParabolicData theta;
  BigInt k;  // number of critical points = |W|/|W_Theta|

  bool points_truncated = false;  // orbit cap hit: size-only mode
  std::vector<CartanVector> critical_points;
  std::vector<Rational> critical_values;            // aligned with points
  std::vector<std::vector<std::size_t>> value_collisions;  // index groups, size >= 2

  int orbit_dim_complex = 0;
  int orbit_dim_real = 0;
  int flag_dim_real = 0;

  bool betti_available = false;
  std::vector<std::uint64_t> fiber_betti;  // degrees 0..flag_dim_real

  std::string status;  // "lefschetz" | "degenerate"
  std::vector<std::string> notes;
};

/// Critical set of f_H on the orbit of h0: exactly weyl_orbit(h0), canonical
/// order. Cap overflow propagates as OrbitCapError (size-only mode upstream).
std::vector<CartanVector> critical_set(const RootSystem& rs, const CartanVector& h0,
                                       std::uint64_t cap = kDefaultOrbitCap);

struct CriticalValues {
  std::vector<Rational> values;
  std::vector<std::vector<std::size_t>> collisions;
};

/// value_i = <h, point_i>; collision groups (size >= 2) are ordered by their
/// smallest member index. Distinct values <=> empty collision list.
CriticalValues critical_values(const RootSystem& rs, const CartanVector& h,
                               const std::vector<CartanVector>& points);

/// (complex, real) dimension of the adjoint orbit of h0:
/// complex = #{roots beta, both signs : <beta, h0> != 0}, real = 2 * complex.
std::pair<int, int> orbit_dimension(const RootSystem& rs, const CartanVector& h0);

/// Betti vector of the regular fiber, degrees 0..d with d = dim_R G/P_Theta:
/// removing the k orbit points from the flag kills the top class and adds
/// k-1 middle classes, so b_i = b_i(F) for i <= d-2, b_{d-1} = k-1, b_d = 0.
/// Throws DegenerateInputError("orbit is a point, no fibration") for h0 = 0.
std::vector<std::uint64_t> fiber_betti(const RootSystem& rs, const CartanVector& h0,
                                       std::uint64_t cap = kDefaultOrbitCap);

/// Aggregates everything above. Degenerate inputs (h non-regular, colliding
/// critical values, h0 = 0) downgrade status to "degenerate" with an
/// explanatory note instead of failing; cap overflows truncate the affected
/// fields with a note.
SlfReport slf_report(const RootSystem& rs, const CartanVector& h0, const CartanVector& h,
                     std::uint64_t cap = kDefaultOrbitCap);

}  // namespace adorb
