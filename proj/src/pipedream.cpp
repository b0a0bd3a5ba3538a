#include "ddcalc/pipedream.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ddcalc/errors.hpp"

namespace ddcalc {

Monomial PipeDream::monomial() const {
  Monomial m = Monomial::one();
  for (const auto& [row, col] : crosses) m = m * Monomial::var(row);
  return m;
}

std::string PipeDream::render() const {
  std::ostringstream out;
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col + row <= n + 1; ++col) {
      out << (crosses.count({row, col}) ? '+' : '.');
    }
    out << "\n";
  }
  return out.str();
}

TraceResult trace_pipes(int n, const std::set<std::pair<int, int>>& crosses) {
  // Pipes enter heading east at the west edge of rows 1..n and exit north
  // through columns 1..n. An elbow joins west<->north and south<->east; a
  // cross passes both strands straight through.
  std::vector<int> one_line(static_cast<std::size_t>(n), 0);
  // Pipe index occupying each cross cell horizontally / vertically.
  std::map<std::pair<int, int>, std::pair<int, int>> cross_pipes;
  for (int start = 1; start <= n; ++start) {
    int row = start, col = 1;
    // heading: 0 = east, 1 = north
    int heading = 0;
    while (row >= 1) {
      bool cross = crosses.count({row, col}) != 0;
      if (cross) {
        auto& [h, v] = cross_pipes[{row, col}];
        (heading == 0 ? h : v) = start;
      } else {
        heading = 1 - heading;
      }
      if (heading == 0) {
        ++col;
      } else {
        --row;
      }
    }
    one_line[static_cast<std::size_t>(col - 1)] = start;
  }
  TraceResult result;
  std::vector<int> w_of(static_cast<std::size_t>(n));
  for (int col = 1; col <= n; ++col) {
    w_of[static_cast<std::size_t>(one_line[static_cast<std::size_t>(col - 1)] - 1)] = col;
  }
  result.w = Permutation::from_one_line(w_of);
  result.reduced = true;
  std::set<std::pair<int, int>> seen;
  for (const auto& [cell, pipes] : cross_pipes) {
    auto pair = std::minmax(pipes.first, pipes.second);
    if (!seen.insert(pair).second) result.reduced = false;
  }
  return result;
}

std::vector<PipeDream> pipe_dreams(const Permutation& w, int max_staircase) {
  int n = std::max(w.size(), 1);
  if (n > max_staircase) {
    throw BoundExceeded("staircase size " + std::to_string(n) + " exceeds bound " +
                        std::to_string(max_staircase));
  }
  std::vector<std::pair<int, int>> cells;
  for (int row = 1; row < n; ++row) {
    for (int col = 1; row + col <= n; ++col) cells.emplace_back(row, col);
  }
  int len = w.length();
  std::vector<PipeDream> result;
  if (len > static_cast<int>(cells.size())) return result;
  // All len-subsets of the staircase cells, validated by the tracer.
  std::vector<int> pick(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == len) {
      std::set<std::pair<int, int>> crosses;
      for (int idx : pick) crosses.insert(cells[static_cast<std::size_t>(idx)]);
      TraceResult tr = trace_pipes(n, crosses);
      if (tr.reduced && tr.w == w) {
        result.push_back(PipeDream{w, n, std::move(crosses)});
      }
      return;
    }
    for (int idx = from; idx < static_cast<int>(cells.size()); ++idx) {
      pick[static_cast<std::size_t>(depth)] = idx;
      self(self, depth + 1, idx + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(result.begin(), result.end());
  return result;
}

Polynomial pipe_dream_polynomial(const Permutation& w, int max_staircase) {
  Polynomial f;
  for (const PipeDream& d : pipe_dreams(w, max_staircase)) {
    f += Polynomial::monomial(d.monomial());
  }
  return f;
}

}  // namespace ddcalc
