#pragma once

#include <optional>
#include <string>

#include "multichain/complexes/chain.hpp"
#include "multichain/msets/instances.hpp"
#include "multichain/surjection/sets.hpp"

namespace multichain::surjection {

// tc(s) = (sigma_0, ..., sigma_i) where sigma_j lists the values of s in the
// order of their (j+1)-st occurrences. Throws MalformedDiagonal unless every
// value occurs the same number of times.
Multisimplex tc(const BarrattEccles& target, const std::vector<std::int32_t>& sequence);

// TC = N(tc) o EZ on N_*(Sur(k)): chains of `sur` to normalized chains of BE(k).
complexes::Chain TC(const msets::Diagonal& sur_diagonal, const BarrattEccles& target, const complexes::Chain& c);

// "(123, 231, 312)"
std::string format_permutations(const BarrattEccles& set, const Multisimplex& x);

struct FiltrationReport {
  int k = 0;
  int d = 0;
  int max_degree = 0;
  // Forward reading: s in Sur_d(k)^D implies tc(s) in BE_d(k).
  std::size_t forward_checked = 0;
  std::size_t forward_violations = 0;
  std::optional<std::string> forward_counterexample;
  // Reverse reading: tc(s) in BE_d(k) implies s in Sur_d(k)^D.
  std::size_t reverse_checked = 0;
  std::size_t reverse_violations = 0;
  std::optional<std::string> reverse_counterexample;
};

// Exhaustive over every diagonal simplex of Sur(k) of degree at most
// max_degree; each reading is checked on the simplices meeting its hypothesis.
FiltrationReport tc_respects_filtration(int k, int d, int max_degree);

}  // namespace multichain::surjection
