#pragma once

#include <string>
#include <vector>

#include "ddcalc/permutation.hpp"  // for Word

namespace ddcalc {

// Plane (m+1)-ary indexed forest, stored canonically as its code vector:
// c_i counts internal nodes whose left-edge descent lands at leaf i.
// The code map is a bijection onto finitely supported sequences, so the code
// is the forest; trimming and the monoid product act directly on it.
class IndexedForest {
public:
  explicit IndexedForest(int m);  // empty forest
  static IndexedForest from_code(std::vector<int> code, int m);
  static IndexedForest generator(int i, int m);  // single internal node at leaf i

  int m() const { return m_; }
  int arity() const { return m_ + 1; }
  const std::vector<int>& code() const { return code_; }
  int code_at(int i) const;
  bool empty() const { return code_.empty(); }
  int size() const;  // number of internal nodes = |code|

  // Left terminal set: {i | c_i != 0 and c_{i+1} = ... = c_{i+m} = 0}.
  std::vector<int> qdes() const;

  // Deletes the terminal node at leaf i; throws NotTerminal if i not in qdes.
  IndexedForest trim(int i) const;

  // Monoid product: leaf i of *this is identified with root i of g.
  IndexedForest multiply(const IndexedForest& g) const;

  bool operator==(const IndexedForest&) const = default;
  bool operator<(const IndexedForest& o) const { return code_ < o.code_; }

  std::string str() const;  // "c=0,2,0,1"

private:
  int m_;
  std::vector<int> code_;
};

// All trimming sequences (i_1,...,i_k) with (((F/i_k)/i_{k-1})/...)/i_1 empty,
// lexicographic order. Identified with the factorizations of F in the
// m-Thompson monoid.
std::vector<Word> trimming_sequences(const IndexedForest& f);

// Product of generators a_{i_1} ... a_{i_k}; total, every word is accepted.
IndexedForest word_to_forest(const Word& word, int m);

// All forests of the given size with code support contained in 1..max_index.
std::vector<IndexedForest> forests_of_size(int size, int m, int max_index);

}  // namespace ddcalc
