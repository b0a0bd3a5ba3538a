#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ddcalc/operators.hpp"
#include "ddcalc/permutation.hpp"  // for Word
#include "ddcalc/polynomial.hpp"

namespace ddcalc {

// Generic dd-pair verification: an indexed operator family X_i, creation
// operators Y_i, and a combinatorial index family with its monoid callbacks.
// Elements are encoded in their native integer-array form (one-line notation,
// forest code, weakly increasing word).
struct DdPairInstance {
  using Element = std::vector<int>;

  std::string name;
  ops::OpFamily dd;       // X_i
  ops::OpFamily creator;  // Y_i
  // Safety margin added to support_bound(f) when truncating sums over i.
  int index_margin = 1;

  std::vector<Element> elements;                                 // finite test set
  std::function<std::vector<int>(const Element&)> last;          // last(w)
  std::function<Element(const Element&, int)> divide;            // w/i, i in last(w)
  std::function<std::vector<Word>(const Element&)> factorizations;  // fac(w)
  std::function<std::vector<int>(const Element&)> code;          // code map
  std::function<Polynomial(const Element&)> poly;                // S_w
  std::function<std::string(const Element&)> show;               // for reports
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample description when failed
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
  void merge(const Report& other);
  std::string str() const;  // one line per check
};

// Checks Sum_i Y_i(X_i f) == f for each sample in Poly^+, truncating the sum
// at support_bound(f) + index_margin.
Report verify_creation(const DdPairInstance& inst, const std::vector<Polynomial>& samples);

// Checks the defining recurrence X_i S_w = S_{w/i} (i in last(w)) or 0, plus
// ct-orthogonality ct X_v S_w = delta_{v,w} over all pairs of elements, plus
// the code-map laws |code(w)| = ell(w) and max supp code(w) = max last(w).
Report verify_duality(const DdPairInstance& inst);

// Concrete instances over exhaustive small index sets.
DdPairInstance schubert_instance(int n = 4);
DdPairInstance forest_instance(int m, int max_size = 3, int max_index = 4);
DdPairInstance slide_instance(Multiplicity m, int max_len = 3, int max_entry = 3);

}  // namespace ddcalc
