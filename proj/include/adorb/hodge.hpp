#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adorb/weyl.hpp"

namespace adorb {

/**
 * Bruhat/Schubert combinatorics of the flag manifold F = G/P_Theta and Hodge
 * diamonds.
 *
 * The Schubert cells of F are indexed by the minimal-length coset
 * representatives W^Theta = { w : w(alpha_i) > 0 for all i in Theta }, the
 * cell for w having complex dimension length(w). Hence
 *   b_{2l}(F) = #{ w in W^Theta : length(w) = l },  b_odd(F) = 0,
 * and h^{p,q}(F) = b_{2p}(F) for p = q, 0 otherwise.
 */

/// counts[l] = number of minimal coset representatives of length l;
/// sum of counts = |W| / |W_Theta|.
struct LengthProfile {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
};

/// Enumerates W^Theta breadth-first (exactly, over integer weight vectors)
/// up to cap; throws OrbitCapError advising index-only mode beyond it.
/// theta holds 0-based simple-root indices.
LengthProfile flag_length_profile(const RootSystem& rs, const std::vector<int>& theta,
                                  std::uint64_t cap = kDefaultOrbitCap);

/// Betti numbers b_0..b_{2m} of G/P_Theta, m its complex dimension.
std::vector<std::uint64_t> flag_poincare(const RootSystem& rs, const std::vector<int>& theta,
                                         std::uint64_t cap = kDefaultOrbitCap);

/// (n+1) x (n+1) grid of candidate Hodge numbers h[p][q]. The symmetry
/// predicates are decidable, not enforced: candidate diamonds may fail them.
struct HodgeDiamond {
  int n = 0;
  std::vector<std::vector<std::uint64_t>> h;

  static HodgeDiamond zero(int n);
  bool operator==(const HodgeDiamond&) const = default;
};

HodgeDiamond flag_diamond(const RootSystem& rs, const std::vector<int>& theta,
                          std::uint64_t cap = kDefaultOrbitCap);

/// Reflection across the 45-degree line: h'[p][q] = h[n-p][q]. Involution.
HodgeDiamond mirror_reflect(const HodgeDiamond& d);

struct DiamondChecks {
  bool serre = false;        // h[p][q] == h[n-p][n-q]
  bool conjugation = false;  // h[p][q] == h[q][p]
  bool connected = false;    // h[0][0] == 1
  bool vampire_flag = false; // d or mirror_reflect(d) fails one of the above
};

/// Necessary-condition screen only: vampire_flag does not decide whether a
/// mirror variety exists, it reports that the diamond or its reflection
/// violates a condition every connected compact Kaehler diamond satisfies.
DiamondChecks diamond_checks(const HodgeDiamond& d);

/// Classical pyramid rendering, apex h[n][n], base h[0][0].
std::string pyramid(const HodgeDiamond& d);

/// Shared validation: sorted, deduplicated, in-range theta or InvalidInputError.
std::vector<int> validate_theta(const RootSystem& rs, std::vector<int> theta);

}  // namespace adorb
