#pragma once

#include <stdexcept>
#include <string>

#include "adorb/numeric.hpp"

namespace adorb {

/// Rejected input: bad Cartan type, malformed rational, dimension mismatch,
/// non-root reflection data, and similar. CLI exit code 2.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration (Weyl orbit, coset representatives) would exceed the cap.
/// Carries the exact count |W| / |W_Theta| so callers can fall back to
/// index-only mode. CLI exit code 3.
class OrbitCapError : public std::runtime_error {
 public:
  OrbitCapError(const std::string& msg, BigInt orbit_index)
      : std::runtime_error(msg), orbit_index_(std::move(orbit_index)) {}

  const BigInt& orbit_index() const { return orbit_index_; }

 private:
  BigInt orbit_index_;
};

/// Structurally degenerate input (e.g. h0 = 0: the orbit is a point and there
/// is no fibration). CLI exit code 4.
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace adorb
