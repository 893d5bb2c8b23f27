#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace adorb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact-rational element of the real Cartan subalgebra, in simple-root
/// coordinates. No floating point is used anywhere in the library.
using CartanVector = std::vector<Rational>;

/// Canonical form "p/q" with gcd(p,q)=1 and q>0, e.g. "0/1", "-2/3", "5/1".
std::string to_fraction_string(const Rational& r);

/// Parses "p" or "p/q" (optional sign). Throws InvalidInputError naming the
/// offending token.
Rational parse_rational(const std::string& token);

/// Comma-separated list of rational tokens.
CartanVector parse_rational_vector(const std::string& csv);

std::string format_vector(const CartanVector& v);

BigInt factorial(unsigned n);

}  // namespace adorb
