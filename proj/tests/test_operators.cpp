#include "ddcalc/operators.hpp"

#include "ddcalc/families.hpp"
#include "ddcalc/random.hpp"
#include "doctest.h"

using namespace ddcalc;
using namespace ddcalc::ops;

namespace {
Polynomial P(const char* s) { return Polynomial::parse(s); }
const Multiplicity kOne(1);
const Multiplicity kInf = Multiplicity::inf();
}  // namespace

TEST_CASE("partial") {
  CHECK(partial(1, P("x1^2")) == P("x1+x2"));
  CHECK(partial(1, P("x1*x2")) == Polynomial());
  // 2 is a descent of 14253, so d_2 S_14253 = S_12453.
  CHECK(partial(2, schubert(Permutation::parse("14253"))) ==
        schubert(Permutation::parse("12453")));
}

TEST_CASE("bs_map") {
  CHECK(bs_map(1, kOne, P("x1+x2")) == P("x1"));
  CHECK(bs_map(2, kInf, P("x1*x3")) == Polynomial());
  // Function application f(x1, 0, x2, ...): x2 evaluates to 0.
  CHECK(bs_map(2, kOne, P("x1*x2^2")) == Polynomial());
  CHECK(bs_map(2, kOne, P("x1*x3^2")) == P("x1*x2^2"));
  CHECK(bs_map(1, Multiplicity(2), P("x3")) == P("x1"));
}

TEST_CASE("qs_dd") {
  CHECK(qs_dd(1, 1, P("x1")) == Polynomial(1));
  CHECK(qs_dd(1, 1, P("x1+x2")) == Polynomial());
  CHECK(qs_dd(1, 2, P("x1")) == Polynomial(1));
}

TEST_CASE("slide_extractor") {
  CHECK(slide_extractor(1, kOne, P("x2")) == Polynomial(-1));
  CHECK(slide_extractor(3, kOne, slide({1, 3, 3}, kOne)) == slide({1, 3}, kOne));
  CHECK(slide({1, 3}, kOne) == P("x1*x2 + x1*x3"));
  CHECK(slide_extractor(2, kInf, P("x1*x2^2")) == P("x1*x2"));
  CHECK(slide_extractor(1, kInf, P("x1*x2^2")) == Polynomial());
}

TEST_CASE("z_op") {
  CHECK(z_op(1, P("x2")) == P("x1+x2"));
  CHECK(z_op(1, P("x1")) == P("x1"));
  CHECK(z_op(2, P("x3")) == P("x1+x3"));
  CHECK_THROWS_AS(z_op(1, P("1+x1")), ConstantTermNonzero);
}

TEST_CASE("schubert_creator") {
  CHECK(schubert_creator(3, Polynomial(1)) == P("x1+x2+x3"));
  CHECK(schubert_creator(2, P("x1+x2+x3")) == P("x1*x2+x1^2+x2^2"));
  CHECK(schubert_creator(1, Polynomial(1)) == P("x1"));
}

TEST_CASE("forest_creator") {
  CHECK(forest_creator(2, 1, Polynomial(1)) == P("x1+x2"));
  CHECK(forest_creator(2, 1, P("x1+x2")) == P("x1*x2+x1^2+x2^2"));
  CHECK(forest_creator(4, 1, P("x1*x2+x1^2+x2^2")) ==
        P("x1*x2*x4+x1^2*x4+x1^2*x3+x2^2*x4"));
}

TEST_CASE("slide_creator") {
  CHECK(slide_creator(1, kOne, Polynomial(1)) == P("x1"));
  CHECK(slide_creator(4, kOne, P("x1*x4^2")) == P("x1") * P("x2^3+x3^3+x4^3"));
  CHECK(slide_creator(5, Multiplicity(2), P("x1")) == P("x1") * P("x3+x5"));
  CHECK(slide_creator(3, kInf, P("x1*x2")) == P("x1*x2*x3"));
}

TEST_CASE("slide_creator matches its compositional form") {
  PolyGen gen(23);
  for (int t = 0; t < 40; ++t) {
    Polynomial f = gen.poly(4, 3);
    for (int i = 1; i <= 5; ++i) {
      CHECK(slide_creator(i, kOne, f) == slide_creator_compositional(i, f));
    }
  }
}

TEST_CASE("operator relations on random homogeneous inputs") {
  PolyGen gen(5);
  for (int t = 0; t < 40; ++t) {
    Polynomial f = gen.homogeneous(4, 3);

    for (int i = 1; i <= 4; ++i) {
      CHECK(partial(i, partial(i, f)).is_zero());
      CHECK(partial(i, partial(i + 2, f)) == partial(i + 2, partial(i, f)));
      CHECK(partial(i, partial(i + 1, partial(i, f))) ==
            partial(i + 1, partial(i, partial(i + 1, f))));
      CHECK(qs_dd(i, 1, f) == bs_map(i, kOne, partial(i, f)));
      CHECK(qs_dd(i, 1, f) == bs_map(i + 1, kOne, partial(i, f)));
    }

    for (int m = 1; m <= 3; ++m) {
      for (int j = 1; j <= 2; ++j) {
        for (int i = j + 1; i <= j + 2; ++i) {
          CHECK(qs_dd(i, m, qs_dd(j, m, f)) == qs_dd(j, m, qs_dd(i + m, m, f)));
        }
      }
    }

    for (int j = 1; j <= 2; ++j) {
      for (int i = j + 1; i <= j + 2; ++i) {
        CHECK(slide_extractor(i, kOne, slide_extractor(j, kOne, f)).is_zero());
      }
    }

    Polynomial lhs;
    for (int i = 1; i <= f.support_bound(); ++i) {
      lhs += Polynomial::var(i) * bs_map(i, kOne, partial(i, f));
    }
    CHECK(lhs == f - bs_map(1, kOne, f));
  }
}

TEST_CASE("creation identities on P+") {
  PolyGen gen(31);
  for (int t = 0; t < 25; ++t) {
    Polynomial f = gen.positive_part(4, 3);
    int n = f.support_bound();

    Polynomial s1, s2, s3, s4, s5;
    for (int i = 1; i <= n + 1; ++i) {
      s1 += schubert_creator(i, partial(i, f));
      s2 += forest_creator(i, 1, qs_dd(i, 1, f));
      s3 += slide_creator(i, kOne, slide_extractor(i, kOne, f));
      s4 += slide_creator(i, kOne, qs_dd(i, 1, f));
      s5 += slide_creator(i, kOne, partial(i, f));
    }
    CHECK(s1 == f);
    CHECK(s2 == f);
    CHECK(s3 == f);
    CHECK(s4 == f);
    CHECK(s5 == f);

    for (int m : {2, 3}) {
      Polynomial fs, ss, ts;
      for (int i = 1; i <= n + m; ++i) {
        fs += forest_creator(i, m, qs_dd(i, m, f));
        ss += slide_creator(i, Multiplicity(m), slide_extractor(i, Multiplicity(m), f));
        ts += slide_creator(i, Multiplicity(m), qs_dd(i, m, f));
      }
      CHECK(fs == f);
      CHECK(ss == f);
      CHECK(ts == f);
    }
  }
}

TEST_CASE("Leibniz rule for the slide extractor") {
  PolyGen gen(37);
  for (int t = 0; t < 25; ++t) {
    Polynomial f = gen.homogeneous(3, 2), g = gen.homogeneous(3, 2);
    for (int i = 1; i <= 4; ++i) {
      CHECK(slide_extractor(i, kOne, f * g) ==
            slide_extractor(i, kOne, f) * bs_map(i + 1, kInf, bs_map(i, kOne, g)) +
                bs_map(i + 1, kInf, f) * slide_extractor(i, kOne, g));
    }
  }
}
