#pragma once

#include <cstdint>
#include <vector>

#include "adorb/root_system.hpp"

namespace adorb {

inline constexpr std::uint64_t kDefaultOrbitCap = 1'000'000;

/// Breadth-first closure of v under the simple reflections, deduplicated and
/// returned in the canonical order (lexicographic on exact coordinates).
/// Throws OrbitCapError carrying |W|/|W_Theta| when the orbit exceeds cap;
/// cap must be positive.
std::vector<CartanVector> weyl_orbit(const RootSystem& rs, const CartanVector& v,
                                     std::uint64_t cap);

/// The unique dominant point of W.v: repeatedly applies s_i while some
/// coroot pairing <alpha_i^vee, v> is negative.
CartanVector dominant_representative(const RootSystem& rs, CartanVector v);

/// Theta = simple roots vanishing on the dominant representative of h0;
/// determines the flag manifold G/P_Theta and the Weyl stabilizer W_Theta.
struct ParabolicData {
  std::vector<int> theta;  // 0-based simple-root indices, sorted
  BigInt stabilizer_order; // |W_Theta|
  BigInt orbit_index;      // |W| / |W_Theta| = |W.h0|
};

/// Stabilizer data of h0. h0 is first moved to its dominant chamber
/// representative (the orbit is unchanged), so the returned stabilizer order
/// is the order of the full Weyl stabilizer of h0, not just of the simple
/// reflections fixing it. Closed-form; never enumerates the orbit.
ParabolicData stabilizer_data(const RootSystem& rs, const CartanVector& h0);

}  // namespace adorb
