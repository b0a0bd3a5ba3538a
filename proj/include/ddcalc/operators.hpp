#pragma once

#include <functional>

#include "ddcalc/multiplicity.hpp"
#include "ddcalc/polynomial.hpp"

namespace ddcalc::ops {

// i'th divided difference: (f - f with x_i, x_{i+1} swapped) / (x_i - x_{i+1}).
Polynomial partial(int i, const Polynomial& f);

// Bergeron-Sottile map R_i^m: f(x_1, ..., x_{i-1}, 0^m, x_i, ...).
// For m = inf this is the truncation killing every variable of index >= i.
Polynomial bs_map(int i, Multiplicity m, const Polynomial& f);

// m-quasisymmetric divided difference T_i^m = (R_{i+1}^m - R_i^m) / x_i.
Polynomial qs_dd(int i, int m, const Polynomial& f);

// Slide extractor D_i^m = R_{i+1}^inf T_i^m; D_i^inf acts on a monomial with
// largest variable index k by deleting one power of x_k when k == i.
Polynomial slide_extractor(int i, Multiplicity m, const Polynomial& f);

// Z^(m) = id + R_1^m + R_1^{2m} + ... on polynomials with no constant term.
// Throws ConstantTermNonzero otherwise.
Polynomial z_op(int m, const Polynomial& f);

// Creation operators.
Polynomial schubert_creator(int i, const Polynomial& f);             // Z x_i R_i
Polynomial forest_creator(int i, int m, const Polynomial& f);        // Z^(m) x_i
Polynomial slide_creator(int i, Multiplicity m, const Polynomial& f);  // B_i^m

// First-class indexed operator family, for the generic verification harness.
using OpFamily = std::function<Polynomial(int, const Polynomial&)>;

OpFamily partial_family();
OpFamily qs_dd_family(int m);
OpFamily slide_extractor_family(Multiplicity m);
OpFamily schubert_creator_family();
OpFamily forest_creator_family(int m);
OpFamily slide_creator_family(Multiplicity m);

// Compositional form of the slide creator, Sum_{1<=k<=i} x_k R_k^{i-k} R_{i+1}^inf;
// retained as an independent oracle for the monomial-formula implementation.
Polynomial slide_creator_compositional(int i, const Polynomial& f);

}  // namespace ddcalc::ops
