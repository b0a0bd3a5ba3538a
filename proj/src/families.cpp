#include "ddcalc/families.hpp"

#include <numeric>
#include <sstream>

#include "ddcalc/errors.hpp"
#include "ddcalc/operators.hpp"

namespace ddcalc {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::slide: return "slide";
    case Basis::monomial: return "monomial";
    case Basis::schubert: return "schubert";
    case Basis::forest: return "forest";
  }
  return "?";
}

void Expansion::add(const std::vector<int>& index, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

Polynomial Expansion::evaluate() const {
  Polynomial result;
  for (const auto& [index, c] : coeffs) {
    Polynomial p;
    switch (basis) {
      case Basis::slide:
        p = slide(index, m);
        break;
      case Basis::monomial:
        p = slide(index, Multiplicity::inf());
        break;
      case Basis::schubert:
        p = schubert(Permutation::from_one_line(index));
        break;
      case Basis::forest:
        p = forest_polynomial(IndexedForest::from_code(index, m.value()), m.value());
        break;
    }
    result += Int(c) * p;
  }
  return result;
}

std::string Expansion::to_json() const {
  std::ostringstream out;
  out << "{\"basis\":\"" << basis_name(basis) << "\"";
  if (basis == Basis::slide || basis == Basis::forest) {
    if (m.is_inf()) {
      out << ",\"m\":\"inf\"";
    } else {
      out << ",\"m\":" << m.value();
    }
  }
  out << ",\"coeffs\":[";
  bool first = true;
  for (const auto& [index, c] : coeffs) {
    if (!first) out << ",";
    out << "{\"index\":[";
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i) out << ",";
      out << index[i];
    }
    out << "],\"coeff\":" << c << "}";
    first = false;
  }
  out << "]}";
  return out.str();
}

Polynomial schubert(const Permutation& w) {
  Polynomial result;
  for (const Word& word : reduced_words(w)) {
    Polynomial f(1);
    for (int i : word) f = ops::schubert_creator(i, f);
    result += f;
  }
  return result;
}

Polynomial schubert_via_staircase(const Permutation& w) {
  int n = std::max(w.size(), 1);
  Monomial staircase = Monomial::one();
  for (int i = 1; i < n; ++i) staircase = staircase * Monomial::var(i, n - i);
  // w_{0,n} = w * u with lengths additive; peel one reduced word of u from the
  // right, applying the matching divided difference at each step.
  std::vector<int> w0(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w0[static_cast<std::size_t>(i)] = n - i;
  Permutation u = w.inverse().compose(Permutation::from_one_line(w0));
  Word word;
  while (!(u == Permutation::identity())) {
    int i = u.descents().front();
    word.push_back(i);
    u = u.apply_s(i);
  }
  // word holds (i_r, ..., i_1) for u = s_{i_1} ... s_{i_r}.
  Polynomial f = Polynomial::monomial(staircase);
  for (int i : word) f = ops::partial(i, f);
  return f;
}

Polynomial forest_polynomial(const IndexedForest& f, int m) {
  if (f.m() != m) throw ArityMismatch("forest has arity " + std::to_string(f.arity()));
  Polynomial result;
  for (const Word& word : trimming_sequences(f)) {
    Polynomial g(1);
    for (int i : word) g = ops::forest_creator(i, m, g);
    result += g;
  }
  return result;
}

Polynomial slide(const Word& a, Multiplicity m) {
  Polynomial result;
  for (const Word& seq : compatible_sequences(a, m)) {
    Monomial mon = Monomial::one();
    for (int i : seq) mon = mon * Monomial::var(i);
    result += Polynomial::monomial(mon);
  }
  return result;
}

namespace {

// Peel extractors largest index first (D_{i_k} acts first); the next index is
// bounded above by the current one, so accumulated words are weakly
// increasing when read left to right.
void slide_expand_rec(const Polynomial& f, Multiplicity m, int bound, Word& suffix,
                      Expansion& out) {
  if (f.is_zero()) return;
  if (f.degree() == 0) {
    Word key(suffix.rbegin(), suffix.rend());
    out.add(key, f.constant_term());
    return;
  }
  for (int i = 1; i <= bound; ++i) {
    Polynomial g = ops::slide_extractor(i, m, f);
    if (g.is_zero()) continue;
    suffix.push_back(i);
    slide_expand_rec(g, m, i, suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

Expansion slide_expand(const Polynomial& f, Multiplicity m) {
  Expansion out;
  out.basis = m.is_inf() ? Basis::monomial : Basis::slide;
  out.m = m;
  if (f.is_zero()) return out;
  Int c = f.constant_term();
  if (c != 0) out.add({}, c);
  for (int d = 1; d <= f.degree(); ++d) {
    Polynomial component = f.homogeneous_component(d);
    Word suffix;
    slide_expand_rec(component, m, component.support_bound(), suffix, out);
  }
  return out;
}

namespace {

Expansion words_to_slide_expansion(const std::vector<Word>& words, Multiplicity m) {
  Expansion out;
  out.basis = Basis::slide;
  out.m = m;
  for (const Word& word : words) {
    if (m.value() == 1) {
      // For m = 1 the slide of any word equals the slide of its bar, or 0.
      if (auto bar = winc_bar(word)) out.add(*bar, 1);
      continue;
    }
    // For m >= 2 the bar of a word need not index the same m-slide (its
    // congruence class can differ), so locate the canonical index by
    // expanding the generating function; it is a single m-slide or 0.
    Polynomial p = slide(word, m);
    if (p.is_zero()) continue;
    Expansion e = slide_expand(p, m);
    for (const auto& [index, c] : e.coeffs) out.add(index, c);
  }
  return out;
}

}  // namespace

Expansion schubert_slide_expansion(const Permutation& w) {
  return words_to_slide_expansion(reduced_words(w), Multiplicity(1));
}

Expansion forest_slide_expansion(const IndexedForest& f, int m) {
  if (f.m() != m) throw ArityMismatch("forest has arity " + std::to_string(f.arity()));
  return words_to_slide_expansion(trimming_sequences(f), Multiplicity(m));
}

Expansion monomial_to_slide(const Word& a) {
  Expansion out;
  out.basis = Basis::slide;
  out.m = Multiplicity(1);
  for (const KostkaTerm& t : kostka_terms(a)) out.add(t.word, t.sign);
  return out;
}

Expansion slide_product_expand(const Word& a, const Word& b) {
  Expansion out = slide_expand(slide(a, Multiplicity(1)) * slide(b, Multiplicity(1)),
                               Multiplicity(1));
  for (const auto& [index, c] : out.coeffs) {
    if (c < 0) {
      throw std::logic_error("slide positivity violated at index of slide product");
    }
  }
  return out;
}

}  // namespace ddcalc
