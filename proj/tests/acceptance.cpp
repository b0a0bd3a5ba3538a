// End-to-end acceptance checks: known golden values plus the randomized
// identity suites, one pass/fail line each.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "ddcalc/families.hpp"
#include "ddcalc/operators.hpp"
#include "ddcalc/pipedream.hpp"
#include "ddcalc/random.hpp"
#include "ddcalc/suites.hpp"

using namespace ddcalc;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (!ok) ++g_failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  [" << ms << " ms]" << note
            << "\n";
}

Polynomial P(const char* s) { return Polynomial::parse(s); }

const Multiplicity kOne(1);
const Multiplicity kInf = Multiplicity::inf();

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "";

  criterion("1. Schubert golden value for 14253, four independent routes agree", [] {
    Permutation w = Permutation::parse("14253");
    Polynomial want = P(
        "x1*x2*x4 + x1^2*x4 + x1^2*x3 + x2^2*x4 + x1*x2^2 + x1*x2*x3 + x2^2*x3 + x1^2*x2");
    Polynomial s = schubert(w);
    return s == want && s == schubert_via_staircase(w) && s == pipe_dream_polynomial(w) &&
           s == schubert_slide_expansion(w).evaluate();
  });

  criterion("2. Forest golden values and code round-trip", [] {
    IndexedForest ex42 = IndexedForest::from_code({0, 2, 0, 1}, 1);
    IndexedForest fig4 = IndexedForest::from_code({2, 0, 1}, 1);
    std::vector<int> fig3 = {0, 2, 0, 1, 0, 0, 1, 0, 0, 0, 2};
    return forest_polynomial(ex42, 1) == schubert(Permutation::parse("14253")) &&
           forest_polynomial(fig4, 1) == P("x1^2*x2 + x1^2*x3") &&
           trimming_sequences(fig4) == std::vector<Word>{{1, 1, 3}, {1, 2, 1}} &&
           IndexedForest::from_code(fig3, 1).code() == fig3;
  });

  criterion("3. Slide golden values and expansions of S_21534", [] {
    if (slide({1, 4, 3}, kOne) != P("x1*x2^2 + x1*x2*x3 + x1*x3^2")) return false;
    if (compatible_sequences({1, 4, 3}, kOne) !=
        std::vector<Word>{{1, 2, 2}, {1, 2, 3}, {1, 3, 3}}) {
      return false;
    }
    if (winc_bar({1, 4, 3}) != Word{1, 3, 3}) return false;
    Polynomial s = schubert(Permutation::parse("21534"));
    Expansion e = slide_expand(s, kOne);
    std::map<std::vector<int>, Int> want{{{1, 1, 1}, 1}, {{1, 1, 3}, 1}, {{1, 3, 3}, 1}};
    return e.coeffs == want && slide_expand(s, kInf).coeffs.at({1, 2, 2}) == 1;
  });

  criterion("4. Monomial-to-slide inversion matches extraction (entries <= 5, len <= 4)", [] {
    Expansion e = monomial_to_slide({2, 4, 4});
    std::map<std::vector<int>, Int> want{{{2, 4, 4}, 1},  {{1, 4, 4}, -1}, {{2, 3, 4}, -1},
                                         {{1, 3, 4}, 1},  {{2, 3, 3}, -1}, {{1, 3, 3}, 1}};
    if (e.coeffs != want || e.evaluate() != P("x2*x4^2")) return false;
    for (const Word& a : winc_words(4, 5)) {
      Polynomial mono(1);
      for (int i : a) mono *= Polynomial::var(i);
      if (monomial_to_slide(a).coeffs != slide_expand(mono, kOne).coeffs) return false;
    }
    return true;
  });

  criterion("5. Pipe dreams: count, tracer invariants, Schubert agreement", [] {
    if (pipe_dreams(Permutation::parse("14253")).size() != 8) return false;
    SuiteOptions o;
    o.seed = 1;
    return suite_pipedreams(o).all_pass();
  });

  criterion("6. Operator relation suite, 100 random homogeneous polynomials", [] {
    SuiteOptions o;
    o.seed = 1;
    return suite_relations(o).all_pass();
  });

  criterion("7. Creation-operator suite incl. corrupted-instance detection", [] {
    SuiteOptions o;
    o.seed = 1;
    return suite_creation(o).all_pass();
  });

  criterion("8. Duality suite: Schubert/S4, forests m in {1,2}, slides", [] {
    SuiteOptions o;
    return suite_duality(o).all_pass();
  });

  criterion("9. Expansion round-trips and slide positivity", [] {
    SuiteOptions o;
    o.seed = 1;
    return suite_expansion(o).all_pass();
  });

  criterion("10. CLI full verification run exits 0 (seed 1, < 5 min)", [&cli_path] {
    if (cli_path.empty()) return false;
    auto start = std::chrono::steady_clock::now();
    std::string cmd = "\"" + cli_path + "\" verify all --seed 1 > /dev/null";
    int rc = std::system(cmd.c_str());
    auto secs =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start)
            .count();
    return rc == 0 && secs < 300;
  });

  return g_failures == 0 ? 0 : 1;
}
