#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "multichain/exactlin/sparse.hpp"

namespace multichain::exactlin {

struct HomologySummary {
  int degree = 0;
  std::size_t betti = 0;
  // Invariant factors > 1, each dividing the next. Empty unless over Z.
  std::vector<mpz_class> torsion;
};

// Homology at the middle of  C' --d_in--> C --d_out--> C''.
// betti = dim ker(d_out) - rank(d_in) over the fraction field of `ring`;
// torsion comes from the Smith normal form of d_in when ring is Z.
// Throws CompositionNotZero if d_out * d_in != 0.
HomologySummary homology_of_pair(const SparseMatrix& d_in, const SparseMatrix& d_out, Ring ring, int degree = 0);

}  // namespace multichain::exactlin
