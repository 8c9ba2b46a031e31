#pragma once

#include "multichain/complexes/chain.hpp"

namespace multichain::complexes {

// The maps from the proof of the normalization theorem, all on C_*(X).
//
// t^l_j(x) = (-1)^(j + a_1 + ... + a_{l-1}) s^l_j(x) when j < a_l, else 0.
// f^l_j = 1 - boundary t^l_j - t^l_j boundary  (a chain map).
// h^l = f^l_0 f^l_1 ... f^l_{a_l - 1} on a generator of direction-l degree
// a_l (the higher f^l_j fix it), and h = h^1 ... h^k. h kills D_*(X) and
// 1 - h = boundary T + T boundary.

Chain degeneracy_homotopy(const MSet& set, const Multisimplex& x, const Ring& ring, int dir, int j);
Chain degeneracy_homotopy(const MSet& set, const Chain& c, int dir, int j);

// f^l_j
Chain elementary_map(const MSet& set, const Chain& c, int dir, int j);

// h
Chain normalizing_map(const MSet& set, const Chain& c);

// T
Chain normalizing_homotopy(const MSet& set, const Chain& c);

}  // namespace multichain::complexes
