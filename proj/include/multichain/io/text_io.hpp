#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multichain/exactlin/coefficient.hpp"
#include "multichain/msets/mset.hpp"

namespace multichain::io {

// Instance selectors: "sur<k>[:<d>]", "be<k>[:<d>]", "std:<i_1>,...,<i_k>".
struct InstanceSpec {
  enum class Family { Surjection, BarrattEccles, Standard };
  Family family = Family::Surjection;
  int k = 1;                 // arity for sur/be
  std::optional<int> d;      // filtration stage, if any
  msets::MultiIndex targets; // std only
};

InstanceSpec parse_instance(std::string_view text);

// Builds the set; `fallback_d` applies to sur/be when the selector names no
// stage. A stage of 0 means unfiltered.
msets::MSetPtr make_instance(const InstanceSpec& spec, std::optional<int> fallback_d = std::nullopt);

// "gen", "3*gen", "-1/2*gen + gen2 - 4*gen3". Generators are in the set's
// canonical text form and may not contain '+', '-' or '*'.
std::vector<std::pair<msets::Multisimplex, exactlin::Coefficient>> parse_terms(const msets::MSet& set,
                                                                                const exactlin::Ring& ring,
                                                                                std::string_view text);

// "1,0,2" or "1 0 2".
msets::MultiIndex parse_multi_index(std::string_view text);

}  // namespace multichain::io
