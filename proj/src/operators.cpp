#include "ddcalc/operators.hpp"

namespace ddcalc::ops {

Polynomial partial(int i, const Polynomial& f) {
  if (i < 1) throw std::invalid_argument("operator index must be >= 1");
  Polynomial swapped = f.substitute([i](int j) {
    if (j == i) return i + 1;
    if (j == i + 1) return i;
    return j;
  });
  if (f == swapped) return Polynomial();
  Polynomial divisor = Polynomial::var(i) - Polynomial::var(i + 1);
  // Divisibility is the standard symmetry argument; NotDivisible here is a bug.
  return (f - swapped).exact_divide(divisor);
}

Polynomial bs_map(int i, Multiplicity m, const Polynomial& f) {
  if (i < 1) throw std::invalid_argument("operator index must be >= 1");
  if (m.is_inf()) {
    return f.substitute([i](int j) { return j < i ? j : 0; });
  }
  int mv = m.value();
  return f.substitute([i, mv](int j) {
    if (j < i) return j;
    if (j < i + mv) return 0;
    return j - mv;
  });
}

Polynomial qs_dd(int i, int m, const Polynomial& f) {
  Multiplicity mm(m);
  Polynomial diff = bs_map(i + 1, mm, f) - bs_map(i, mm, f);
  if (diff.is_zero()) return Polynomial();
  return diff.exact_divide(Polynomial::var(i));
}

Polynomial slide_extractor(int i, Multiplicity m, const Polynomial& f) {
  if (i < 1) throw std::invalid_argument("operator index must be >= 1");
  if (m.is_inf()) {
    // On x_1^{a_1}...x_k^{a_k} with a_k >= 1: delta_{i,k} x_1^{a_1}...x_k^{a_k-1}.
    Polynomial r;
    for (const auto& [mon, c] : f.terms()) {
      if (mon.support_bound() != i) continue;
      r += Polynomial::monomial(mon.divide_by(Monomial::var(i)), c);
    }
    return r;
  }
  return bs_map(i + 1, Multiplicity::inf(), qs_dd(i, m.value(), f));
}

Polynomial z_op(int m, const Polynomial& f) {
  if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
  if (f.constant_term() != 0) {
    throw ConstantTermNonzero("z_op requires zero constant term");
  }
  Polynomial acc;
  Polynomial g = f;
  // R_1^m lowers support_bound by m and kills the rest, so this terminates.
  while (!g.is_zero()) {
    acc += g;
    g = bs_map(1, Multiplicity(m), g);
  }
  return acc;
}

Polynomial schubert_creator(int i, const Polynomial& f) {
  return z_op(1, Polynomial::var(i) * bs_map(i, Multiplicity(1), f));
}

Polynomial forest_creator(int i, int m, const Polynomial& f) {
  return z_op(m, Polynomial::var(i) * f);
}

Polynomial slide_creator(int i, Multiplicity m, const Polynomial& f) {
  if (i < 1) throw std::invalid_argument("operator index must be >= 1");
  Polynomial r;
  for (const auto& [mon, c] : f.terms()) {
    if (mon.support_bound() > i) continue;  // vanishes outside Poly_i
    int p = mon.exponent(i);
    int j = 0;
    for (int k = i - 1; k >= 1; --k) {
      if (mon.exponent(k) > 0) {
        j = k;
        break;
      }
    }
    Monomial base = mon.divide_by(Monomial::var(i, p));
    if (m.is_inf()) {
      r += Polynomial::monomial(base * Monomial::var(i, p + 1), c);
      continue;
    }
    for (int k = i; k > j; k -= m.value()) {
      r += Polynomial::monomial(base * Monomial::var(k, p + 1), c);
    }
  }
  return r;
}

Polynomial slide_creator_compositional(int i, const Polynomial& f) {
  Polynomial truncated = bs_map(i + 1, Multiplicity::inf(), f);
  Polynomial r;
  for (int k = 1; k <= i; ++k) {
    Polynomial g = truncated;
    if (i - k >= 1) g = bs_map(k, Multiplicity(i - k), g);
    r += Polynomial::var(k) * g;
  }
  return r;
}

OpFamily partial_family() {
  return [](int i, const Polynomial& f) { return partial(i, f); };
}

OpFamily qs_dd_family(int m) {
  return [m](int i, const Polynomial& f) { return qs_dd(i, m, f); };
}

OpFamily slide_extractor_family(Multiplicity m) {
  return [m](int i, const Polynomial& f) { return slide_extractor(i, m, f); };
}

OpFamily schubert_creator_family() {
  return [](int i, const Polynomial& f) { return schubert_creator(i, f); };
}

OpFamily forest_creator_family(int m) {
  return [m](int i, const Polynomial& f) { return forest_creator(i, m, f); };
}

OpFamily slide_creator_family(Multiplicity m) {
  return [m](int i, const Polynomial& f) { return slide_creator(i, m, f); };
}

}  // namespace ddcalc::ops
