#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ddcalc {

using Word = std::vector<int>;

// Finite-support permutation of {1, 2, ...} in one-line notation; trailing
// fixed points are trimmed so that equal permutations compare equal.
class Permutation {
public:
  Permutation() = default;  // identity
  static Permutation identity() { return {}; }
  static Permutation from_one_line(std::vector<int> one_line);
  static Permutation from_lehmer(const std::vector<int>& code);
  static Permutation simple(int i);  // s_i

  int operator()(int i) const;  // image of i, identity beyond the support
  int size() const { return static_cast<int>(one_line_.size()); }  // minimal n with w in S_n
  const std::vector<int>& one_line() const { return one_line_; }

  int length() const;                 // inversion count
  std::vector<int> descents() const;  // {i | w(i) > w(i+1)}
  Permutation apply_s(int i) const;   // w * s_i (swap positions i, i+1)
  Permutation inverse() const;
  Permutation compose(const Permutation& v) const;  // (w.compose(v))(i) = w(v(i))
  std::vector<int> lehmer_code() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return one_line_ < o.one_line_; }

  // "14253" when all values are single digits, "[1,4,2,5,3]" otherwise.
  std::string str() const;
  static Permutation parse(std::string_view text);

private:
  std::vector<int> one_line_;
};

// All reduced words of w, deterministic lexicographic order.
std::vector<Word> reduced_words(const Permutation& w);

// Group product s_{i_1}...s_{i_k}; reduced iff the length equals k.
std::pair<Permutation, bool> word_to_perm(const Word& word);

// The n! elements of S_n, lexicographic by one-line notation.
std::vector<Permutation> symmetric_group(int n);

}  // namespace ddcalc
