#include "ddcalc/pipedream.hpp"

#include <random>

#include "ddcalc/errors.hpp"
#include "ddcalc/families.hpp"
#include "doctest.h"

using namespace ddcalc;

TEST_CASE("pipe dream golden values") {
  CHECK(pipe_dreams(Permutation::parse("14253")).size() == 8);
  auto id_dreams = pipe_dreams(Permutation::identity());
  REQUIRE(id_dreams.size() == 1);
  CHECK(id_dreams[0].crosses.empty());
  auto s1 = pipe_dreams(Permutation::parse("21"));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].crosses == std::set<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("pipe dream polynomials") {
  CHECK(pipe_dream_polynomial(Permutation::parse("14253")) ==
        schubert(Permutation::parse("14253")));
  CHECK(pipe_dream_polynomial(Permutation::identity()) == Polynomial(1));
  CHECK(pipe_dream_polynomial(Permutation::parse("21")) == Polynomial::var(1));
  for (const Permutation& w : symmetric_group(4)) {
    CHECK(pipe_dream_polynomial(w) == schubert(w));
  }
}

TEST_CASE("tracer invariants") {
  for (const Permutation& w : symmetric_group(4)) {
    for (const PipeDream& pd : pipe_dreams(w)) {
      CHECK(static_cast<int>(pd.crosses.size()) == w.length());
      for (auto [r, c] : pd.crosses) CHECK(r + c <= pd.n);
      TraceResult tr = trace_pipes(pd.n, pd.crosses);
      CHECK(tr.reduced);
      CHECK(tr.w == w);
    }
  }
}

TEST_CASE("random S5 agreement") {
  std::mt19937_64 rng(99);
  auto s5 = symmetric_group(5);
  std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
  for (int t = 0; t < 10; ++t) {
    const Permutation& w = s5[pick(rng)];
    CHECK(pipe_dream_polynomial(w) == schubert(w));
  }
}

TEST_CASE("staircase bound") {
  // 87654321 lives in S8, beyond the default bound of 7.
  CHECK_THROWS_AS(pipe_dreams(Permutation::parse("87654321")), BoundExceeded);
  CHECK_NOTHROW(pipe_dreams(Permutation::parse("87654321"), 8));
}

TEST_CASE("rendering") {
  auto dreams = pipe_dreams(Permutation::parse("21"));
  REQUIRE(dreams.size() == 1);
  CHECK(dreams[0].render() == "+.\n.\n");
}
