#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ddcalc/errors.hpp"

namespace ddcalc {

using Int = boost::multiprecision::cpp_int;

// A monomial in x1, x2, ...: exponent vector with trailing zeros trimmed.
// The empty vector is the monomial 1.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one() { return Monomial(); }
  static Monomial var(int index, int exponent = 1);

  int exponent(int index) const;
  int degree() const;
  // Largest variable index appearing, 0 for the monomial 1.
  int support_bound() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;
  Monomial divide_by(const Monomial& o) const;

  bool operator==(const Monomial& o) const = default;

  std::string str() const;

private:
  std::vector<int> exps_;
};

// Canonical term order: total degree descending, then lexicographic on
// exponent sequences descending. a "before" b means a prints first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact sparse polynomial over Z in x1, x2, ...; immutable value semantics,
// no stored zero coefficients.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Int, MonomialOrder>;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Int(c)) {}
  Polynomial(Int c);

  static Polynomial var(int index) { return monomial(Monomial::var(index)); }
  static Polynomial monomial(Monomial m, Int coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const;
  bool is_homogeneous() const;
  // Smallest n with every variable index in every term <= n (0 for constants).
  int support_bound() const;
  Int constant_term() const;
  Int coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // Returns q with q*g == *this; throws NotDivisible otherwise.
  Polynomial exact_divide(const Polynomial& g) const;

  // Replaces x_j by x_{slot_map(j)}, or by 0 when slot_map(j) == 0.
  // slot_map must be injective on nonzero outputs over the support bound.
  Polynomial substitute(const std::function<int(int)>& slot_map) const;

  // Sum of terms of exact total degree d.
  Polynomial homogeneous_component(int d) const;

  const TermMap& terms() const { return terms_; }

  std::string str() const;
  static Polynomial parse(std::string_view text);

private:
  void add_term(const Monomial& m, const Int& c);
  TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& f) {
  return Polynomial(c) * f;
}

}  // namespace ddcalc
