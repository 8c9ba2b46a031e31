#pragma once

#include <json.hpp>

#include "multichain/complexes/chain.hpp"
#include "multichain/ezaw/tensor.hpp"

namespace multichain::io {

using json = nlohmann::json;

// Chains:   {"ring": "Z", "terms": [{"coeff": "-1", "gen": "121", "degree": [1, 0]}, ...]}
// Cochains: the same, plus "degree": n at the top level.
// Tensors:  terms carry "left"/"right" generators and "left_degree"/"right_degree".
// Coefficients are strings ("3", "-1/2") so big values survive.
// Readers validate every generator against the set and throw ParseError.

json to_json(const msets::MSet& set, const complexes::Chain& c);
complexes::Chain chain_from_json(const msets::MSet& set, const json& j);

json to_json(const msets::MSet& set, const complexes::Cochain& a);
complexes::Cochain cochain_from_json(const msets::MSet& set, const json& j);

json to_json(const msets::MSet& left, const msets::MSet& right, const ezaw::TensorChain& t);
ezaw::TensorChain tensor_from_json(const msets::MSet& left, const msets::MSet& right, const json& j);

json degree_json(const msets::MultiIndex& m);

}  // namespace multichain::io
