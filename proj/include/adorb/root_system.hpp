#pragma once

#include <optional>
#include <vector>

#include "adorb/cartan.hpp"
#include "adorb/numeric.hpp"

namespace adorb {

/// Integer coordinates of a root in the simple-root basis.
using RootCoords = std::vector<int>;

/**
 * Exact combinatorial model of an irreducible root system.
 *
 * Everything lives in the simple-root basis of the (real) Cartan subalgebra,
 * identified with its dual via the invariant form B = diag(d) * A, where A is
 * the Cartan matrix and d the minimal integer symmetrizers. B is symmetric,
 * positive definite, and integral; short roots have B(a,a) = 2.
 *
 * The simple reflection s_i acts on simple-root coordinates v by
 *   (s_i v)_k = v_k - delta_{ki} * sum_j A[i][j] v_j,
 * an integer matrix, so orbits of rational vectors stay exactly rational.
 */
class RootSystem {
 public:
  static RootSystem build(const CartanType& t);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }
  /// B_ij = d_i * a_ij, the invariant form on simple-root coordinates.
  const std::vector<std::vector<int>>& form() const { return form_; }
  /// Positive roots, sorted by (height, lexicographic); classical count.
  const std::vector<RootCoords>& positive_roots() const { return positive_roots_; }
  const BigInt& weyl_order() const { return weyl_order_; }
  const std::optional<std::string>& note() const { return note_; }

  /// Invariant form <v,w> = v^T B w. Throws on dimension mismatch.
  Rational pairing(const CartanVector& v, const CartanVector& w) const;

  /// <beta, v> for an integer root beta.
  Rational root_pairing(const RootCoords& beta, const CartanVector& v) const;

  /// Coroot pairing <alpha_i^vee, v> = row i of A applied to v.
  Rational coroot_pairing(int i, const CartanVector& v) const;

  CartanVector reflect_simple(int i, const CartanVector& v) const;

  /// Reflection in an arbitrary root: s_beta(v) = v - 2<v,beta>/<beta,beta> beta.
  /// Rejects beta that is not a root of this system.
  CartanVector reflect_root(const RootCoords& beta, const CartanVector& v) const;

  bool is_root(const RootCoords& beta) const;

  /// First positive root vanishing on h, if any. h is regular iff nullopt.
  std::optional<RootCoords> vanishing_root(const CartanVector& h) const;
  bool is_regular(const CartanVector& h) const { return !vanishing_root(h).has_value(); }

  /// Basis change from fundamental-weight coordinates c (c_i = <alpha_i^vee, v>)
  /// to simple-root coordinates: solves A x = c exactly.
  CartanVector from_fundamental_weights(const CartanVector& c) const;
  CartanVector to_fundamental_weights(const CartanVector& x) const;

 private:
  RootSystem() = default;

  CartanType type_{};
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizers_;
  std::vector<std::vector<int>> form_;
  std::vector<RootCoords> positive_roots_;
  BigInt weyl_order_;
  std::optional<std::string> note_;
};

/// Spec-level constructor name; validates rank bounds.
RootSystem build_root_system(const CartanType& t);

}  // namespace adorb
