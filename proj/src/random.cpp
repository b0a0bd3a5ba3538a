#include "ddcalc/random.hpp"

namespace ddcalc {

Int PolyGen::random_coeff() {
  std::uniform_int_distribution<int> d(1, 9);
  int c = d(rng_);
  return std::bernoulli_distribution(0.5)(rng_) ? Int(c) : Int(-c);
}

Monomial PolyGen::random_monomial(int vars, int deg, bool exact_degree, bool nonconstant) {
  std::vector<int> exps(static_cast<std::size_t>(vars), 0);
  std::uniform_int_distribution<int> var(0, vars - 1);
  int total = exact_degree ? deg : std::uniform_int_distribution<int>(nonconstant ? 1 : 0, deg)(rng_);
  for (int k = 0; k < total; ++k) ++exps[static_cast<std::size_t>(var(rng_))];
  return Monomial(exps);
}

Polynomial PolyGen::poly(int vars, int deg, int terms) {
  Polynomial f;
  for (int t = 0; t < terms; ++t) {
    f += Polynomial::monomial(random_monomial(vars, deg, false, false), random_coeff());
  }
  return f;
}

Polynomial PolyGen::homogeneous(int vars, int deg, int terms) {
  Polynomial f;
  for (int t = 0; t < terms; ++t) {
    f += Polynomial::monomial(random_monomial(vars, deg, true, false), random_coeff());
  }
  return f;
}

Polynomial PolyGen::positive_part(int vars, int deg, int terms) {
  Polynomial f;
  for (int t = 0; t < terms; ++t) {
    f += Polynomial::monomial(random_monomial(vars, deg, false, true), random_coeff());
  }
  return f;
}

}  // namespace ddcalc
