#include "adorb/weyl.hpp"

#include <deque>
#include <set>

#include "adorb/errors.hpp"

namespace adorb {

std::vector<CartanVector> weyl_orbit(const RootSystem& rs, const CartanVector& v,
                                     std::uint64_t cap) {
  if (cap == 0) throw InvalidInputError("orbit cap must be positive");
  if (static_cast<int>(v.size()) != rs.rank()) {
    throw InvalidInputError("weyl_orbit: vector length does not match rank");
  }

  std::set<CartanVector> seen{v};
  std::deque<CartanVector> queue{v};
  while (!queue.empty()) {
    const CartanVector u = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      CartanVector w = rs.reflect_simple(i, u);
      if (seen.insert(w).second) {
        if (seen.size() > cap) {
          const ParabolicData pd = stabilizer_data(rs, v);
          throw OrbitCapError("orbit too large (cap " + std::to_string(cap) +
                                  "), use orbit_index " + pd.orbit_index.str(),
                              pd.orbit_index);
        }
        queue.push_back(std::move(w));
      }
    }
  }
  // std::set of coordinate vectors is already the canonical lexicographic order.
  return {seen.begin(), seen.end()};
}

CartanVector dominant_representative(const RootSystem& rs, CartanVector v) {
  if (static_cast<int>(v.size()) != rs.rank()) {
    throw InvalidInputError("dominant_representative: vector length does not match rank");
  }
  // Each step strictly increases <rho, v>, so this terminates on the finite orbit.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.coroot_pairing(i, v) < 0) {
        v = rs.reflect_simple(i, v);
        moved = true;
      }
    }
  }
  return v;
}

ParabolicData stabilizer_data(const RootSystem& rs, const CartanVector& h0) {
  const CartanVector dom = dominant_representative(rs, h0);
  ParabolicData pd;
  for (int i = 0; i < rs.rank(); ++i) {
    if (rs.coroot_pairing(i, dom) == 0) pd.theta.push_back(i);
  }
  const int k = static_cast<int>(pd.theta.size());
  std::vector<std::vector<int>> sub(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) sub[a][b] = rs.cartan()[pd.theta[a]][pd.theta[b]];
  }
  pd.stabilizer_order = weyl_order_of_cartan(sub);
  const BigInt rem = rs.weyl_order() % pd.stabilizer_order;
  if (rem != 0) throw std::logic_error("stabilizer order does not divide |W|");
  pd.orbit_index = rs.weyl_order() / pd.stabilizer_order;
  return pd;
}

}  // namespace adorb
