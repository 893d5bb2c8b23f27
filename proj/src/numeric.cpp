#include "adorb/numeric.hpp"

#include <cctype>
#include <sstream>

#include "adorb/errors.hpp"

namespace adorb {

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  const std::string num_part = token.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "" : token.substr(slash + 1);

  if (!is_integer_token(num_part) || (slash != std::string::npos && !is_integer_token(den_part))) {
    throw InvalidInputError("not a rational number: '" + token + "'");
  }
  const BigInt num(num_part);
  const BigInt den = den_part.empty() ? BigInt(1) : BigInt(den_part);
  if (den == 0) {
    throw InvalidInputError("zero denominator: '" + token + "'");
  }
  return Rational(num) / Rational(den);
}

CartanVector parse_rational_vector(const std::string& csv) {
  CartanVector out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    out.push_back(parse_rational(token));
  }
  if (out.empty()) {
    throw InvalidInputError("empty vector: '" + csv + "'");
  }
  return out;
}

std::string format_vector(const CartanVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_fraction_string(v[i]);
  }
  return out;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace adorb
