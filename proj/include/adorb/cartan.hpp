#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adorb/numeric.hpp"

namespace adorb {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One of the simple Cartan types A..G with its rank. Rank bounds:
/// A >= 1, B >= 2, C >= 2 (C2 accepted and flagged as isomorphic to B2),
/// D >= 4, E in {6,7,8}, F = 4, G = 2.
struct CartanType {
  Series series;
  int rank;

  static CartanType parse(const std::string& name);
  void validate() const;
  std::string name() const;

  bool operator==(const CartanType&) const = default;
};

/// Cartan matrix a[i][j] = 2(a_i,a_j)/(a_i,a_i) = <a_j, a_i^vee>, with the
/// Bourbaki node numbering. Under this convention diag(d) * a is symmetric
/// for the minimal integer symmetrizers d.
std::vector<std::vector<int>> cartan_matrix(const CartanType& t);

/// Minimal positive integer symmetrizers d_i = (a_i,a_i)/2 with short roots
/// normalized to squared length 2 (so d_i = 1 short, 2 or 3 long).
std::vector<int> symmetrizers(const CartanType& t);

BigInt weyl_order(const CartanType& t);

/// Classical positive-root count for the type (A_n: n(n+1)/2, B_n/C_n: n^2,
/// D_n: n(n-1), G2: 6, F4: 24, E6: 36, E7: 63, E8: 120).
std::size_t positive_root_count(const CartanType& t);

/// Weyl order of the (finite-type) root system presented by an arbitrary
/// Cartan matrix, e.g. the induced submatrix on a subset Theta of simple
/// roots. Classifies connected components of the diagram and multiplies the
/// classical orders; never enumerates.
BigInt weyl_order_of_cartan(const std::vector<std::vector<int>>& cartan);

/// Exceptional-isomorphism note for permissive inputs (currently C2 ~ B2).
std::optional<std::string> isomorphism_note(const CartanType& t);

}  // namespace adorb
