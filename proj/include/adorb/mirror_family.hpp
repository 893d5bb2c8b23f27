#pragma once

#include <string>
#include <vector>

#include "adorb/numeric.hpp"

namespace adorb {

/// Exact element of Q(i).
struct ComplexRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const ComplexRational&) const = default;
};

/// Parses "a", "bi", "a+bi", "a-bi" with rational a, b (e.g. "-5/3", "1/2+3i").
ComplexRational parse_complex_rational(const std::string& token);
std::string format_complex(const ComplexRational& c);

/**
 * Exact fiber geometry of the surface X in C x C* x P1 cut out by
 *   u*y = v*(x + 1 + 1/x),
 * with potential g = y. The fiber over y = c is the curve in C* x P1 given
 * by u*c = v*(x + 1 + 1/x). This one family is a verified worked example,
 * not a general hypersurface engine.
 */

enum class FiberTopology { affine_line_minus_point, projective_line };

int euler_characteristic(FiberTopology t);
std::string topology_name(FiberTopology t);

struct FiberComponent {
  std::string description;
  FiberTopology topology{};
  std::string equations;
  int euler_characteristic = 0;
};

/// Node of the critical fiber; the x coordinate is a primitive cube root of
/// unity, kept symbolic via its minimal polynomial. No floats.
struct FiberNode {
  std::string description;
  std::string y;
  std::string x;
  std::string x_minimal_polynomial;
  std::string uv;
};

struct MirrorFiberReport {
  ComplexRational level;
  bool is_critical = false;
  std::vector<FiberComponent> components;
  std::vector<FiberNode> nodes;
  int euler_characteristic = 0;  // sum over components minus node count
};

/// c != 0: one smooth component, the graph [u:v] = [x+1+1/x : c] over C*.
/// c  = 0: {v=0} = C* and the two lines {x^2+x+1 = 0} x P1, meeting in 2 nodes.
MirrorFiberReport classify_fiber(const ComplexRational& c);

/// Exactly {0} for this family.
std::vector<ComplexRational> critical_levels();

struct ConsistencyRow {
  std::string quantity;
  std::uint64_t value = 0;
  std::string provenance;  // "built-in category data" | "computed"
};

/// Juxtaposes rank-level counts from the two sides. Emits no equivalence
/// claim; the note says so explicitly.
struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;
  std::string note;
};

ConsistencyReport mirror_consistency_report();

}  // namespace adorb
