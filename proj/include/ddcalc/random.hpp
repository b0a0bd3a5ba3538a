#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ddcalc/polynomial.hpp"

namespace ddcalc {

// Seeded generator of random sparse polynomials for property testing.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  // Random polynomial with support bound <= vars, total degree <= deg,
  // nonzero integer coefficients in [-9, 9].
  Polynomial poly(int vars, int deg, int terms = 4);

  // Homogeneous of exactly the given degree.
  Polynomial homogeneous(int vars, int deg, int terms = 4);

  // Element of P+ (zero constant term).
  Polynomial positive_part(int vars, int deg, int terms = 4);

  std::mt19937_64& engine() { return rng_; }

 private:
  Monomial random_monomial(int vars, int deg, bool exact_degree, bool nonconstant);
  Int random_coeff();

  std::mt19937_64 rng_;
};

}  // namespace ddcalc
