#include "multichain/io/json_io.hpp"

#include "multichain/error.hpp"

namespace multichain::io {

using complexes::Chain;
using complexes::Cochain;
using exactlin::Coefficient;
using exactlin::Ring;
using msets::MultiIndex;
using msets::Multisimplex;

json degree_json(const MultiIndex& m) { return json(m.degrees()); }

namespace {

Ring ring_of(const json& j) {
  if (!j.is_object() || !j.contains("ring") || !j["ring"].is_string()) throw ParseError("JSON input needs a \"ring\" string");
  return Ring::parse(j["ring"].get<std::string>());
}

const json& terms_of(const json& j) {
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("JSON input needs a \"terms\" array");
  return j["terms"];
}

Coefficient coeff_of(const Ring& ring, const json& t) {
  if (!t.contains("coeff")) throw ParseError("term without \"coeff\"");
  const json& c = t["coeff"];
  if (c.is_string()) return Coefficient::parse(ring, c.get<std::string>());
  if (c.is_number_integer()) return Coefficient(ring, c.get<long>());
  throw ParseError("\"coeff\" must be a string or an integer");
}

Multisimplex gen_of(const msets::MSet& set, const json& t, const char* gen_key, const char* degree_key) {
  if (!t.contains(gen_key) || !t[gen_key].is_string()) throw ParseError(std::string("term without \"") + gen_key + "\"");
  Multisimplex x = set.decode(t[gen_key].get<std::string>());
  if (t.contains(degree_key)) {
    std::vector<int> degree;
    try {
      degree = t[degree_key].get<std::vector<int>>();
    } catch (const json::exception&) {
      throw ParseError(std::string("\"") + degree_key + "\" must be a list of integers");
    }
    if (MultiIndex(degree) != x.degree)
      throw ParseError("generator " + t[gen_key].get<std::string>() + " has degree " + x.degree.to_string());
  }
  return x;
}

json term(const msets::MSet& set, const Multisimplex& x, const Coefficient& c) {
  return json{{"coeff", c.to_string()}, {"gen", set.encode(x)}, {"degree", degree_json(x.degree)}};
}

}  // namespace

json to_json(const msets::MSet& set, const Chain& c) {
  json terms = json::array();
  for (const auto& [x, v] : c.terms()) terms.push_back(term(set, x, v));
  return json{{"ring", c.ring().name()}, {"terms", std::move(terms)}};
}

Chain chain_from_json(const msets::MSet& set, const json& j) {
  const Ring ring = ring_of(j);
  Chain c(ring);
  for (const auto& t : terms_of(j)) c.add(gen_of(set, t, "gen", "degree"), coeff_of(ring, t));
  return c;
}

json to_json(const msets::MSet& set, const Cochain& a) {
  json terms = json::array();
  for (const auto& [x, v] : a.values()) terms.push_back(term(set, x, v));
  return json{{"ring", a.ring().name()}, {"degree", a.degree()}, {"terms", std::move(terms)}};
}

Cochain cochain_from_json(const msets::MSet& set, const json& j) {
  const Ring ring = ring_of(j);
  if (!j.contains("degree") || !j["degree"].is_number_integer()) throw ParseError("cochain JSON needs an integer \"degree\"");
  Cochain a(ring, j["degree"].get<int>());
  for (const auto& t : terms_of(j)) {
    Multisimplex x = gen_of(set, t, "gen", "degree");
    if (x.degree.total() != a.degree()) throw ParseError("cochain term " + set.encode(x) + " has the wrong total degree");
    a.add(x, coeff_of(ring, t));
  }
  return a;
}

json to_json(const msets::MSet& left, const msets::MSet& right, const ezaw::TensorChain& t) {
  json terms = json::array();
  for (const auto& [key, v] : t.terms())
    terms.push_back(json{{"coeff", v.to_string()},
                         {"left", left.encode(key[0])},
                         {"left_degree", degree_json(key[0].degree)},
                         {"right", right.encode(key[1])},
                         {"right_degree", degree_json(key[1].degree)}});
  return json{{"ring", t.ring().name()}, {"terms", std::move(terms)}};
}

ezaw::TensorChain tensor_from_json(const msets::MSet& left, const msets::MSet& right, const json& j) {
  const Ring ring = ring_of(j);
  ezaw::TensorChain t(ring);
  for (const auto& term : terms_of(j))
    t.add({gen_of(left, term, "left", "left_degree"), gen_of(right, term, "right", "right_degree")}, coeff_of(ring, term));
  return t;
}

}  // namespace multichain::io
