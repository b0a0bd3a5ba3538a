#include "ddcalc/polynomial.hpp"

#include "ddcalc/random.hpp"
#include "doctest.h"

using namespace ddcalc;

namespace {
Polynomial P(const char* s) { return Polynomial::parse(s); }
}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK(P("x1") + P("-x1") == Polynomial());
  CHECK(P("x1") + Polynomial() == P("x1"));
  CHECK(P("x1") + P("x1") == P("2*x1"));
  CHECK(P("x1+x2") * P("x1-x2") == P("x1^2-x2^2"));
  CHECK(P("x1*x2^3 - 7") * Polynomial(1) == P("x1*x2^3 - 7"));
  CHECK(P("x1") * P("x1") == P("x1^2"));
}

TEST_CASE("exact division") {
  CHECK(P("x1^2-x2^2").exact_divide(P("x1-x2")) == P("x1+x2"));
  CHECK(P("x1*x2").exact_divide(P("x1")) == P("x2"));
  CHECK_THROWS_AS(P("x1+x2").exact_divide(P("x1")), NotDivisible);
}

TEST_CASE("substitute") {
  auto f = P("x1*x3");
  CHECK(f.substitute([](int j) { return j == 3 ? 2 : j; }) == P("x1*x2"));
  CHECK(P("x2").substitute([](int j) { return j == 2 ? 0 : j; }) == Polynomial());
  CHECK(f.substitute([](int j) { return j; }) == f);
}

TEST_CASE("constant term and degree") {
  CHECK(P("3 + x1").constant_term() == 3);
  CHECK(P("x1*x2").constant_term() == 0);
  CHECK(Polynomial().constant_term() == 0);
  CHECK(Polynomial().degree() == -1);
  CHECK(P("x1^2*x2 + 3*x3").degree() == 3);
  CHECK(P("x1^2*x2 + 3*x3").support_bound() == 3);
  CHECK(P("5").support_bound() == 0);
}

TEST_CASE("parse and print") {
  CHECK(P("x1^2*x2 + 3*x3").terms().size() == 2);
  CHECK(P("0") == Polynomial());
  CHECK(P("x2+x1").str() == "x1 + x2");
  CHECK(P("x2 - x1").str() == "-x1 + x2");
  CHECK_THROWS_AS(Polynomial::parse("x0"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x1^"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("1 + + 2"), ParseError);
}

TEST_CASE("print/parse round-trip on random polynomials") {
  PolyGen gen(42);
  for (int t = 0; t < 50; ++t) {
    Polynomial f = gen.poly(4, 4, 6);
    CHECK(Polynomial::parse(f.str()) == f);
  }
}

TEST_CASE("ring axioms on random inputs") {
  PolyGen gen(7);
  for (int t = 0; t < 30; ++t) {
    Polynomial f = gen.poly(3, 3), g = gen.poly(3, 3), h = gen.poly(3, 3);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("homogeneous multiplication adds degrees") {
  PolyGen gen(11);
  for (int t = 0; t < 20; ++t) {
    Polynomial f = gen.homogeneous(3, 2), g = gen.homogeneous(3, 3);
    if (f.is_zero() || g.is_zero()) continue;
    Polynomial p = f * g;
    if (p.is_zero()) continue;
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 5);
  }
}

TEST_CASE("exact_divide inverts multiplication") {
  PolyGen gen(13);
  for (int t = 0; t < 30; ++t) {
    Polynomial q = gen.poly(3, 3), g = gen.poly(3, 2);
    if (g.is_zero()) continue;
    CHECK((q * g).exact_divide(g) == q);
  }
}

TEST_CASE("support bound shifts under substitution") {
  PolyGen gen(17);
  for (int t = 0; t < 20; ++t) {
    Polynomial f = gen.poly(3, 3);
    if (f.degree() < 1) continue;
    Polynomial shifted = f.substitute([](int j) { return j + 2; });
    CHECK(shifted.support_bound() == f.support_bound() + 2);
  }
}

TEST_CASE("large coefficients stay exact") {
  Polynomial f = P("x1 + 1");
  Polynomial p(1);
  for (int i = 0; i < 64; ++i) p *= f;
  // Central binomial coefficient C(64,32) needs > 60 bits.
  CHECK(p.coefficient(Monomial::var(1, 32)) == Int("1832624140942590534"));
}
