#pragma once

#include <optional>
#include <vector>

#include "ddcalc/multiplicity.hpp"
#include "ddcalc/permutation.hpp"  // for Word

namespace ddcalc {

bool is_winc(const Word& a);  // weakly increasing, entries >= 1

// C^m(a): weakly increasing (i_1,...,i_k) with i_j <= a_j, i_j < i_{j+1} at
// strict ascents of a, and i_j = a_j mod m (m = inf forces i_j = a_j).
// Deterministic lexicographic order.
std::vector<Word> compatible_sequences(const Word& a, Multiplicity m);

// Componentwise maximum of C(a), or nullopt when C(a) is empty.
std::optional<Word> winc_bar(const Word& a);

// One signed term of the slide expansion of a monomial.
struct KostkaTerm {
  Word word;
  int sign;  // +1 or -1
  bool operator==(const KostkaTerm&) const = default;
};

// E(a) with signs: the signed multiplicity-free slide expansion index set of
// the monomial x_{a_1}...x_{a_k}, for weakly increasing a. Words in
// lexicographic order.
std::vector<KostkaTerm> kostka_terms(const Word& a);

// All weakly increasing words with the given length and entry bounds,
// lexicographic order; includes the empty word when min_len == 0.
std::vector<Word> winc_words(int max_len, int max_entry, int min_len = 0);

}  // namespace ddcalc
