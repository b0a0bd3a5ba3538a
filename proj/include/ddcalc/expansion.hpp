#pragma once

#include <map>
#include <string>
#include <vector>

#include "ddcalc/multiplicity.hpp"
#include "ddcalc/polynomial.hpp"

namespace ddcalc {

enum class Basis { slide, monomial, schubert, forest };

std::string basis_name(Basis b);

// A finitely supported integer combination of basis elements. Indices are
// stored in the basis's native integer-array form: a weakly increasing word
// for slide/monomial, one-line notation for schubert, a code vector for
// forest. Keys are kept in lexicographic order.
struct Expansion {
  Basis basis = Basis::slide;
  Multiplicity m = Multiplicity(1);  // used by slide and forest bases
  std::map<std::vector<int>, Int> coeffs;

  void add(const std::vector<int>& index, const Int& c);
  bool operator==(const Expansion&) const = default;

  // Sum of coeff * basis polynomial; exact.
  Polynomial evaluate() const;

  std::string to_json() const;
};

}  // namespace ddcalc
