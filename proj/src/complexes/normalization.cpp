#include "multichain/complexes/normalization.hpp"

#include <algorithm>

#include "multichain/complexes/complex.hpp"

namespace multichain::complexes {

Chain degeneracy_homotopy(const MSet& set, const Multisimplex& x, const Ring& ring, int dir, int j) {
  Chain out(ring);
  if (j < 0 || j >= x.degree[dir]) return out;
  int prefix = 0;
  for (int m = 0; m < dir; ++m) prefix += x.degree[m];
  out.add(set.degeneracy(x, dir, j), (j + prefix) % 2 == 0 ? 1 : -1);
  return out;
}

Chain degeneracy_homotopy(const MSet& set, const Chain& c, int dir, int j) {
  Chain out(c.ring());
  for (const auto& [x, v] : c.terms()) out.add(degeneracy_homotopy(set, x, c.ring(), dir, j), v);
  return out;
}

Chain elementary_map(const MSet& set, const Chain& c, int dir, int j) {
  Chain out = c;
  out -= boundary(set, degeneracy_homotopy(set, c, dir, j));
  out -= degeneracy_homotopy(set, boundary(set, c), dir, j);
  return out;
}

namespace {

int top_degree(const Chain& c, int dir) {
  int top = 0;
  for (const auto& [x, v] : c.terms()) top = std::max(top, x.degree[dir]);
  return top;
}

// h^l = f_0 f_1 ... f_{a-1}, rightmost first. Each f preserves multidegree,
// so the bound read off the input stays valid.
Chain direction_map(const MSet& set, const Chain& c, int dir) {
  Chain y = c;
  for (int j = top_degree(c, dir) - 1; j >= 0; --j) y = elementary_map(set, y, dir, j);
  return y;
}

// T^l = sum_j f_0 ... f_{j-1} t_j
Chain direction_homotopy(const MSet& set, const Chain& c, int dir) {
  Chain out(c.ring());
  const int top = top_degree(c, dir);
  for (int j = 0; j < top; ++j) {
    Chain y = degeneracy_homotopy(set, c, dir, j);
    for (int i = j - 1; i >= 0; --i) y = elementary_map(set, y, dir, i);
    out += y;
  }
  return out;
}

}  // namespace

Chain normalizing_map(const MSet& set, const Chain& c) {
  Chain y = c;
  for (int l = set.k() - 1; l >= 0; --l) y = direction_map(set, y, l);
  return y;
}

Chain normalizing_homotopy(const MSet& set, const Chain& c) {
  // From 1 - h^1 H' = (1 - h^1) + h^1 (1 - H'): T = T^1 + h^1 T', that is
  // T = sum_l h^1 ... h^{l-1} T^l.
  Chain total(c.ring());
  for (int l = 0; l < set.k(); ++l) {
    Chain y = direction_homotopy(set, c, l);
    for (int m = l - 1; m >= 0; --m) y = direction_map(set, y, m);
    total += y;
  }
  return total;
}

}  // namespace multichain::complexes
