#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ddcalc/permutation.hpp"
#include "ddcalc/polynomial.hpp"

namespace ddcalc {

// A reduced pipe dream for w in the staircase of size n: a set of cross
// cells (row, col) with row + col <= n; all other staircase cells hold
// elbows. Pipe entering row i exits through column w(i), and no two pipes
// cross twice.
struct PipeDream {
  Permutation w;
  int n = 0;
  std::set<std::pair<int, int>> crosses;

  Monomial monomial() const;  // product of x_row over crosses

  // One line per row, '+' for cross, '.' for elbow.
  std::string render() const;

  bool operator==(const PipeDream&) const = default;
  bool operator<(const PipeDream& o) const { return crosses < o.crosses; }
};

// Traces the pipes of a cross set in the staircase of size n. Returns the
// resulting permutation and whether the dream is reduced (no pair of pipes
// crossing twice).
struct TraceResult {
  Permutation w;
  bool reduced = false;
};
TraceResult trace_pipes(int n, const std::set<std::pair<int, int>>& crosses);

inline constexpr int kDefaultStaircaseBound = 7;

// Exhaustive enumeration over all length(w)-subsets of staircase cells.
// Throws BoundExceeded when the minimal staircase size exceeds max_staircase.
std::vector<PipeDream> pipe_dreams(const Permutation& w, int max_staircase = kDefaultStaircaseBound);

// Generating polynomial sum of x^D over pipe dreams; equals schubert(w).
Polynomial pipe_dream_polynomial(const Permutation& w, int max_staircase = kDefaultStaircaseBound);

}  // namespace ddcalc
