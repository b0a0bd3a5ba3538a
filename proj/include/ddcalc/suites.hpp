#pragma once

#include <cstdint>
#include <optional>

#include "ddcalc/multiplicity.hpp"
#include "ddcalc/pipedream.hpp"
#include "ddcalc/verify.hpp"

namespace ddcalc {

// Knobs for the randomized verification suites; all suites are deterministic
// given the options.
struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  int vars = 4;
  int deg = 4;
  std::optional<Multiplicity> m;  // restricts duality to one multiplicity
  int max_staircase = kDefaultStaircaseBound;
};

Report suite_relations(const SuiteOptions& opts);
Report suite_creation(const SuiteOptions& opts);
Report suite_duality(const SuiteOptions& opts);
Report suite_expansion(const SuiteOptions& opts);
Report suite_kostka(const SuiteOptions& opts);
Report suite_pipedreams(const SuiteOptions& opts);
Report suite_all(const SuiteOptions& opts);

}  // namespace ddcalc
