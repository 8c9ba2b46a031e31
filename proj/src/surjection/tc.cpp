#include "multichain/surjection/tc.hpp"

#include "multichain/complexes/complex.hpp"
#include "multichain/error.hpp"
#include "multichain/ezaw/maps.hpp"

namespace multichain::surjection {

Multisimplex tc(const BarrattEccles& target, const std::vector<std::int32_t>& sequence) {
  const int k = target.arity();
  std::vector<int> counts(static_cast<std::size_t>(k) + 1, 0);
  for (auto v : sequence) {
    if (v < 1 || v > k) throw MalformedDiagonal("value " + std::to_string(v) + " outside 1.." + std::to_string(k));
    ++counts[static_cast<std::size_t>(v)];
  }
  const int n = counts[1];
  for (int v = 1; v <= k; ++v)
    if (counts[static_cast<std::size_t>(v)] != n || n == 0)
      throw MalformedDiagonal("tc needs every value to occur equally often");
  std::vector<std::vector<std::int32_t>> perms(static_cast<std::size_t>(n));
  std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
  for (auto v : sequence) perms[static_cast<std::size_t>(seen[static_cast<std::size_t>(v)]++)].push_back(v);
  Multisimplex x{{}, MultiIndex{n - 1}};
  for (const auto& p : perms) x.payload.insert(x.payload.end(), p.begin(), p.end());
  return x;
}

complexes::Chain TC(const msets::Diagonal& sur_diagonal, const BarrattEccles& target, const complexes::Chain& c) {
  complexes::Chain out(c.ring());
  const auto ez = ezaw::ez_multisimplicial(sur_diagonal, c, complexes::ChainMode::Normalized);
  for (const auto& [x, v] : ez.terms()) {
    Multisimplex y = tc(target, x.payload);
    if (!target.is_degenerate(y)) out.add(y, v);
  }
  return out;
}

std::string format_permutations(const BarrattEccles& set, const Multisimplex& x) {
  std::string s = "(";
  bool first = true;
  for (const auto& p : set.permutations(x)) {
    if (!first) s += ", ";
    first = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (set.arity() > 9 && i) s += ',';
      s += std::to_string(p[i]);
    }
  }
  return s + ")";
}

FiltrationReport tc_respects_filtration(int k, int d, int max_degree) {
  FiltrationReport r;
  r.k = k;
  r.d = d;
  r.max_degree = max_degree;
  SurjectionSet sur(k);
  BarrattEccles be(k);
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& s : sur.enumerate(MultiIndex::constant(k, n))) {
      const int c = complexity(s.payload, k);
      const Multisimplex w = tc(be, s.payload);
      const int bc = be_complexity(w.payload, k);
      const std::string example = sur.encode(s) + " -> " + format_permutations(be, w);
      if (c <= d) {
        ++r.forward_checked;
        if (bc > d && ++r.forward_violations == 1) r.forward_counterexample = example;
      }
      if (bc <= d) {
        ++r.reverse_checked;
        if (c > d && ++r.reverse_violations == 1) r.reverse_counterexample = example;
      }
    }
  return r;
}

}  // namespace multichain::surjection
