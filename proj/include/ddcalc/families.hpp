#pragma once

#include "ddcalc/expansion.hpp"
#include "ddcalc/forest.hpp"
#include "ddcalc/multiplicity.hpp"
#include "ddcalc/permutation.hpp"
#include "ddcalc/polynomial.hpp"
#include "ddcalc/words.hpp"

namespace ddcalc {

// Schubert polynomial via creation operators summed over reduced words.
Polynomial schubert(const Permutation& w);

// Independent oracle: divided differences applied to the staircase monomial
// x_1^{n-1} x_2^{n-2} ... x_{n-1} along a reduced word of w^{-1} w_{0,n}.
Polynomial schubert_via_staircase(const Permutation& w);

// m-forest polynomial via Z^(m) x_i creation operators over Trim(F).
Polynomial forest_polynomial(const IndexedForest& f, int m);

// m-slide polynomial: generating function over m-compatible sequences.
Polynomial slide(const Word& a, Multiplicity m);

// Coefficient-extraction expansion in the m-slide basis (m = inf gives the
// monomial basis); evaluating the result reproduces f exactly.
Expansion slide_expand(const Polynomial& f, Multiplicity m);

// BJS-style expansions: sum of slide indicators over Red(w) / Trim(F), with
// each word normalized through winc_bar.
Expansion schubert_slide_expansion(const Permutation& w);
Expansion forest_slide_expansion(const IndexedForest& f, int m);

// Signed multiplicity-free slide expansion of the monomial x_{a_1}...x_{a_k}.
Expansion monomial_to_slide(const Word& a);

// Slide expansion of the product of two slide polynomials; coefficients are
// asserted nonnegative (slide positivity is a theorem).
Expansion slide_product_expand(const Word& a, const Word& b);

}  // namespace ddcalc
