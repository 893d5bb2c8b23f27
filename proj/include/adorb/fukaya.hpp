#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adorb/slf.hpp"

namespace adorb {

/// Rank of one graded piece of a Hom complex of free modules.
struct GradedRank {
  int degree = 0;
  std::uint64_t rank = 0;

  bool operator==(const GradedRank&) const = default;
};

/// For each pair i < j, the (degree, rank) list of CF*(L_i, L_j).
/// Thimble intersections carry no general algorithm here; the data is
/// supplied by the caller.
using IntersectionData = std::map<std::pair<int, int>, std::vector<GradedRank>>;

struct CategoryObject {
  std::string label;
  std::optional<Rational> critical_value;
  std::optional<CartanVector> critical_point;
};

/**
 * Rank-level model of a directed category of vanishing cycles: objects
 * L_0..L_r ordered by increasing critical value, Hom(L_i,L_j) a graded free
 * module for i < j, the base ring times identity for i = j, zero for i > j.
 * Coefficients are ranks of free modules over an unspecified base; torsion
 * is out of scope.
 */
struct DirectedCategory {
  std::vector<CategoryObject> objects;
  /// Only pairs i < j with nonempty rank lists are stored.
  std::map<std::pair<int, int>, std::vector<GradedRank>> cross_homs;
  /// True when asserted (LG(2)) or vacuous (no nonzero cross-Homs);
  /// false means "no product data supplied".
  bool products_all_vanish_except_identity = false;

  int num_objects() const { return static_cast<int>(objects.size()); }

  /// Hom(L_i, L_j) ranks: [(0,1)] for i = j, empty for i > j.
  std::vector<GradedRank> hom_ranks(int i, int j) const;

  /// Total rank over all degrees of Hom(L_i, L_j).
  std::uint64_t hom_total_rank(int i, int j) const;
};

/// Validates and assembles the triangular Hom structure. Rejects data keyed
/// by i >= j, out-of-range indices, zero ranks, and duplicate degrees.
DirectedCategory build_directed_category(int num_objects, const IntersectionData& data);

/// The two-object category with Hom(L0,L1) of rank 1 in degrees 0 and 1,
/// Hom(L1,L0) = 0, and all higher products vanishing except identity
/// compositions.
DirectedCategory lg2_category();

/// Alternating rank sum of Hom(L_i, L_j).
long long hom_euler(const DirectedCategory& cat, int i, int j);

/// One object per critical point, ordered by increasing critical value.
/// Requires a "lefschetz" report with enumerated, collision-free values
/// (otherwise the object order is undefined).
DirectedCategory category_from_slf(const SlfReport& report, const IntersectionData& data);

}  // namespace adorb
