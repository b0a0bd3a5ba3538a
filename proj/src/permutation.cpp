#include "ddcalc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ddcalc/errors.hpp"

namespace ddcalc {

namespace {

void trim_fixed_points(std::vector<int>& v) {
  while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
}

}  // namespace

Permutation Permutation::from_one_line(std::vector<int> one_line) {
  int n = static_cast<int>(one_line.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : one_line) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of {1,...,n}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  trim_fixed_points(one_line);
  Permutation w;
  w.one_line_ = std::move(one_line);
  return w;
}

Permutation Permutation::simple(int i) {
  if (i < 1) throw std::invalid_argument("simple transposition index must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(i + 1));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return from_one_line(std::move(v));
}

int Permutation::operator()(int i) const {
  if (i < 1) throw std::invalid_argument("permutation argument must be >= 1");
  if (i > size()) return i;
  return one_line_[static_cast<std::size_t>(i - 1)];
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (one_line_[static_cast<std::size_t>(i)] > one_line_[static_cast<std::size_t>(j)]) ++inv;
    }
  }
  return inv;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> des;
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i) > (*this)(i + 1)) des.push_back(i);
  }
  return des;
}

Permutation Permutation::apply_s(int i) const {
  std::vector<int> v = one_line_;
  if (static_cast<int>(v.size()) < i + 1) {
    std::size_t old = v.size();
    v.resize(static_cast<std::size_t>(i + 1));
    std::iota(v.begin() + static_cast<std::ptrdiff_t>(old), v.end(), static_cast<int>(old) + 1);
  }
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return from_one_line(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(one_line_.size());
  for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>((*this)(i)-1)] = i;
  return from_one_line(std::move(v));
}

Permutation Permutation::compose(const Permutation& v) const {
  int n = std::max(size(), v.size());
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i - 1)] = (*this)(v(i));
  return from_one_line(std::move(r));
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> c(one_line_.size(), 0);
  for (int i = 1; i <= size(); ++i) {
    for (int j = i + 1; j <= size(); ++j) {
      if ((*this)(i) > (*this)(j)) ++c[static_cast<std::size_t>(i - 1)];
    }
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Permutation Permutation::from_lehmer(const std::vector<int>& code) {
  // c_i counts smaller values to the right: place the (c_i + 1)'th unused value.
  int n = static_cast<int>(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] < 0) throw std::invalid_argument("negative Lehmer code entry");
    n = std::max(n, static_cast<int>(i) + 1 + code[i]);
  }
  std::vector<int> unused(static_cast<std::size_t>(n));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int ci = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
    v.push_back(unused[static_cast<std::size_t>(ci)]);
    unused.erase(unused.begin() + ci);
  }
  return from_one_line(std::move(v));
}

std::string Permutation::str() const {
  if (one_line_.empty()) return "1";
  bool digits = std::all_of(one_line_.begin(), one_line_.end(), [](int v) { return v <= 9; });
  std::ostringstream out;
  if (digits) {
    for (int v : one_line_) out << v;
  } else {
    out << "[";
    for (std::size_t i = 0; i < one_line_.size(); ++i) {
      if (i) out << ",";
      out << one_line_[i];
    }
    out << "]";
  }
  return out.str();
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("expected ']'", text.size());
    std::string inner(text.substr(1, text.size() - 2));
    std::istringstream in(inner);
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        v.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ParseError("bad permutation entry '" + part + "'", 0);
      }
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw ParseError("expected digit 1-9 in one-line notation", i);
      }
      v.push_back(c - '0');
    }
  }
  try {
    return from_one_line(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<Word> reduced_words(const Permutation& w) {
  // Red(w) = {(prefix, i) | i in Des(w), prefix in Red(w s_i)}.
  if (w == Permutation::identity()) return {Word{}};
  std::vector<Word> result;
  for (int i : w.descents()) {
    for (Word prefix : reduced_words(w.apply_s(i))) {
      prefix.push_back(i);
      result.push_back(std::move(prefix));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::pair<Permutation, bool> word_to_perm(const Word& word) {
  Permutation w;
  for (int i : word) w = w.compose(Permutation::simple(i));
  return {w, w.length() == static_cast<int>(word.size())};
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return result;
}

}  // namespace ddcalc
