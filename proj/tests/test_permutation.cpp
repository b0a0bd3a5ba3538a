#include "ddcalc/permutation.hpp"

#include <algorithm>

#include "ddcalc/errors.hpp"
#include "doctest.h"

using namespace ddcalc;

TEST_CASE("length, descents, apply_s") {
  Permutation w = Permutation::parse("14253");
  CHECK(w.length() == 3);
  CHECK(w.descents() == std::vector<int>{2, 4});
  CHECK(w.apply_s(4) == Permutation::parse("14235"));
  CHECK(Permutation::identity().length() == 0);
  CHECK(Permutation::identity().descents().empty());
}

TEST_CASE("lehmer code") {
  CHECK(Permutation::parse("14253").lehmer_code() == std::vector<int>{0, 2, 0, 1});
  CHECK(Permutation::identity().lehmer_code().empty());
  for (const Permutation& w : symmetric_group(4)) {
    CHECK(Permutation::from_lehmer(w.lehmer_code()) == w);
  }
}

TEST_CASE("reduced words") {
  auto red = reduced_words(Permutation::parse("14253"));
  CHECK(red == std::vector<Word>{{3, 2, 4}, {3, 4, 2}});
  CHECK(reduced_words(Permutation::identity()) == std::vector<Word>{{}});
  CHECK(reduced_words(Permutation::simple(2)) == std::vector<Word>{{2}});
}

TEST_CASE("word_to_perm") {
  auto [w, reduced] = word_to_perm({3, 2, 4});
  CHECK(w == Permutation::parse("14253"));
  CHECK(reduced);
  auto [v, r2] = word_to_perm({1, 1});
  CHECK(v == Permutation::identity());
  CHECK(!r2);
  auto [u, r3] = word_to_perm({});
  CHECK(u == Permutation::identity());
  CHECK(r3);
}

TEST_CASE("every reduced word multiplies back, exhaustive over S5") {
  for (const Permutation& w : symmetric_group(5)) {
    for (const Word& word : reduced_words(w)) {
      auto [v, reduced] = word_to_perm(word);
      CHECK(v == w);
      CHECK(reduced);
    }
  }
}

TEST_CASE("lehmer code is a code map over S5") {
  for (const Permutation& w : symmetric_group(5)) {
    std::vector<int> c = w.lehmer_code();
    int sum = 0, maxsupp = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      sum += c[i];
      if (c[i] != 0) maxsupp = static_cast<int>(i) + 1;
    }
    CHECK(sum == w.length());
    std::vector<int> des = w.descents();
    int maxdes = des.empty() ? 0 : *std::max_element(des.begin(), des.end());
    CHECK(maxsupp == maxdes);
  }
}

TEST_CASE("parsing and printing") {
  CHECK(Permutation::parse("[1,4,2,5,3]") == Permutation::parse("14253"));
  CHECK(Permutation::parse("14253").str() == "14253");
  CHECK_THROWS_AS(Permutation::parse("11"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("10"), ParseError);
}
