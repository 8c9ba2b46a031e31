#pragma once

#include <memory>
#include <random>

#include "multichain/msets/instances.hpp"
#include "multichain/surjection/sets.hpp"

namespace testing_support {

using multichain::msets::MSetPtr;
using multichain::msets::MultiIndex;
using multichain::msets::Multisimplex;

inline MSetPtr sur(int k, std::optional<int> d = std::nullopt) {
  return std::make_shared<multichain::surjection::SurjectionSet>(k, d);
}

inline MSetPtr standard(MultiIndex targets) {
  return std::make_shared<multichain::msets::StandardMultisimplex>(std::move(targets));
}

// Uniform degree with every entry <= per_dir and total <= max_total, then a
// uniform element; empty degrees are redrawn.
inline Multisimplex random_element(const multichain::msets::MSet& set, std::mt19937_64& rng, int per_dir,
                                   int max_total) {
  std::uniform_int_distribution<int> entry(0, per_dir);
  for (;;) {
    std::vector<int> d(static_cast<std::size_t>(set.k()));
    int total = 0;
    for (auto& a : d) total += a = entry(rng);
    if (total > max_total) continue;
    const auto& xs = set.enumerate(MultiIndex(d));
    if (xs.empty()) continue;
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
  }
}

}  // namespace testing_support
