#include "ddcalc/forest.hpp"

#include <algorithm>
#include <sstream>

#include "ddcalc/errors.hpp"

namespace ddcalc {

namespace {

void trim_trailing_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

IndexedForest::IndexedForest(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("forest family parameter m must be >= 1");
}

IndexedForest IndexedForest::from_code(std::vector<int> code, int m) {
  IndexedForest f(m);
  for (int c : code) {
    if (c < 0) throw std::invalid_argument("negative forest code entry");
  }
  trim_trailing_zeros(code);
  f.code_ = std::move(code);
  return f;
}

IndexedForest IndexedForest::generator(int i, int m) {
  if (i < 1) throw std::invalid_argument("generator index must be >= 1");
  std::vector<int> code(static_cast<std::size_t>(i), 0);
  code[static_cast<std::size_t>(i - 1)] = 1;
  return from_code(std::move(code), m);
}

int IndexedForest::code_at(int i) const {
  if (i < 1 || i > static_cast<int>(code_.size())) return 0;
  return code_[static_cast<std::size_t>(i - 1)];
}

int IndexedForest::size() const {
  int s = 0;
  for (int c : code_) s += c;
  return s;
}

std::vector<int> IndexedForest::qdes() const {
  std::vector<int> result;
  for (int i = 1; i <= static_cast<int>(code_.size()); ++i) {
    if (code_at(i) == 0) continue;
    bool terminal = true;
    for (int k = 1; k <= m_; ++k) {
      if (code_at(i + k) != 0) {
        terminal = false;
        break;
      }
    }
    if (terminal) result.push_back(i);
  }
  return result;
}

IndexedForest IndexedForest::trim(int i) const {
  auto q = qdes();
  if (std::find(q.begin(), q.end(), i) == q.end()) {
    throw NotTerminal("index " + std::to_string(i) + " is not in the left terminal set");
  }
  // Deleting the terminal node at i merges leaves i..i+m into one, so the
  // entries above position i shift down by m (those in between are zero).
  std::vector<int> code(code_.begin(), code_.begin() + i);
  code[static_cast<std::size_t>(i - 1)] -= 1;
  for (int j = i + m_ + 1; j <= static_cast<int>(code_.size()); ++j) {
    code.push_back(code_at(j));
  }
  return from_code(std::move(code), m_);
}

IndexedForest IndexedForest::multiply(const IndexedForest& g) const {
  if (m_ != g.m_) throw ArityMismatch("forest arities differ");
  // F * a_i appends a terminal node at leaf i: entries above i shift up by m.
  auto append_generator = [this](std::vector<int>& code, int i) {
    if (static_cast<int>(code.size()) < i) code.resize(static_cast<std::size_t>(i), 0);
    std::vector<int> result(code.begin(), code.begin() + i);
    result[static_cast<std::size_t>(i - 1)] += 1;
    result.insert(result.end(), static_cast<std::size_t>(m_), 0);
    result.insert(result.end(), code.begin() + i, code.end());
    code = std::move(result);
  };
  // Peel g into one factorization word (rightmost factor trimmed first) and
  // fold the generators onto *this.
  std::vector<int> gword;
  IndexedForest rest = g;
  while (!rest.empty()) {
    int i = rest.qdes().front();
    gword.push_back(i);
    rest = rest.trim(i);
  }
  std::vector<int> code = code_;
  for (auto it = gword.rbegin(); it != gword.rend(); ++it) append_generator(code, *it);
  return from_code(std::move(code), m_);
}

std::string IndexedForest::str() const {
  std::ostringstream out;
  out << "c=";
  if (code_.empty()) {
    out << "0";
  } else {
    for (std::size_t i = 0; i < code_.size(); ++i) {
      if (i) out << ",";
      out << code_[i];
    }
  }
  return out.str();
}

std::vector<Word> trimming_sequences(const IndexedForest& f) {
  // Trim(F) = {(prefix, i) | i in qdes(F), prefix in Trim(F/i)}.
  if (f.empty()) return {Word{}};
  std::vector<Word> result;
  for (int i : f.qdes()) {
    for (Word prefix : trimming_sequences(f.trim(i))) {
      prefix.push_back(i);
      result.push_back(std::move(prefix));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

IndexedForest word_to_forest(const Word& word, int m) {
  IndexedForest f(m);
  for (int i : word) f = f.multiply(IndexedForest::generator(i, m));
  return f;
}

std::vector<IndexedForest> forests_of_size(int size, int m, int max_index) {
  std::vector<IndexedForest> result;
  std::vector<int> code(static_cast<std::size_t>(max_index), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == max_index) {
      if (remaining == 0) result.push_back(IndexedForest::from_code(code, m));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      code[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, remaining - c);
    }
    code[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, size);
  return result;
}

}  // namespace ddcalc
