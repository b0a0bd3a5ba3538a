#include "ddcalc/words.hpp"

#include <algorithm>

namespace ddcalc {

bool is_winc(const Word& a) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 1) return false;
    if (j > 0 && a[j] < a[j - 1]) return false;
  }
  return true;
}

std::vector<Word> compatible_sequences(const Word& a, Multiplicity m) {
  for (int v : a) {
    if (v < 1) throw std::invalid_argument("word entries must be >= 1");
  }
  if (m.is_inf()) {
    // The congruence forces i_j = a_j, so C = {a} iff a is weakly increasing.
    if (is_winc(a)) return {a};
    return {};
  }
  std::vector<Word> result;
  Word current;
  auto rec = [&](auto&& self, std::size_t j, int min_i) -> void {
    if (j == a.size()) {
      result.push_back(current);
      return;
    }
    for (int i = min_i; i <= a[j]; ++i) {
      if ((a[j] - i) % m.value() != 0) continue;
      bool strict = j + 1 < a.size() && a[j] < a[j + 1];
      current.push_back(i);
      self(self, j + 1, strict ? i + 1 : i);
      current.pop_back();
    }
  };
  rec(rec, 0, 1);
  return result;
}

std::optional<Word> winc_bar(const Word& a) {
  if (a.empty()) return Word{};
  Word b(a.size());
  b.back() = a.back();
  for (std::size_t j = a.size() - 1; j-- > 0;) {
    int cap = b[j + 1] - (a[j] < a[j + 1] ? 1 : 0);
    b[j] = std::min(a[j], cap);
    if (b[j] < 1) return std::nullopt;
  }
  return b;
}

namespace {

// E_i(a) for one block of m_i copies of M_i: sequences (b_1,...,b_{m_i}) with
// steps b_{j+1}-b_j in {0,1}, b_{m_i+1} := M_i, and b_1 > prev_max, together
// with the step count n(b) = M_i - b_1.
std::vector<std::pair<Word, int>> block_terms(int big_m, int mult, int prev_max) {
  std::vector<std::pair<Word, int>> result;
  Word b(static_cast<std::size_t>(mult));
  auto rec = [&](auto&& self, int j, int next) -> void {
    // next = b_{j+1}; b_j may be next or next-1.
    if (j == 0) {
      if (b.front() > prev_max) result.emplace_back(b, big_m - b.front());
      return;
    }
    for (int step = 0; step <= 1; ++step) {
      int v = next - step;
      if (v <= prev_max) continue;
      b[static_cast<std::size_t>(j - 1)] = v;
      self(self, j - 1, v);
    }
  };
  rec(rec, mult, big_m);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<KostkaTerm> kostka_terms(const Word& a) {
  if (!is_winc(a)) throw std::invalid_argument("kostka_terms requires a weakly increasing word");
  // Block decomposition a = (M_1^{m_1}, ..., M_p^{m_p}).
  std::vector<std::pair<int, int>> blocks;
  for (int v : a) {
    if (!blocks.empty() && blocks.back().first == v) {
      ++blocks.back().second;
    } else {
      blocks.emplace_back(v, 1);
    }
  }
  std::vector<KostkaTerm> result{KostkaTerm{{}, 1}};
  int prev_max = 0;
  for (auto [big_m, mult] : blocks) {
    std::vector<KostkaTerm> next;
    for (const auto& [block, steps] : block_terms(big_m, mult, prev_max)) {
      for (const auto& t : result) {
        Word w = t.word;
        w.insert(w.end(), block.begin(), block.end());
        next.push_back(KostkaTerm{std::move(w), steps % 2 == 0 ? t.sign : -t.sign});
      }
    }
    result = std::move(next);
    prev_max = big_m;
  }
  std::sort(result.begin(), result.end(),
            [](const KostkaTerm& x, const KostkaTerm& y) { return x.word < y.word; });
  return result;
}

std::vector<Word> winc_words(int max_len, int max_entry, int min_len) {
  std::vector<Word> result;
  Word current;
  auto rec = [&](auto&& self, int min_entry) -> void {
    if (static_cast<int>(current.size()) >= min_len) result.push_back(current);
    if (static_cast<int>(current.size()) == max_len) return;
    for (int v = min_entry; v <= max_entry; ++v) {
      current.push_back(v);
      self(self, v);
      current.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace ddcalc
