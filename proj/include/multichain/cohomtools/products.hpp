#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multichain/cohomtools/cohomology.hpp"
#include "multichain/msets/instances.hpp"

namespace multichain::cohomtools {

struct EzRingReport {
  std::vector<std::size_t> betti_set;       // H^*(X)
  std::vector<std::size_t> betti_diagonal;  // H^*(X^D)
  bool cocycles_preserved = true;           // EZ* of a cocycle is a cocycle
  bool isomorphism = true;                  // every M_n invertible
  bool structure_constants_agree = true;    // M(phi ⌣ psi) = M(phi) ⌣ M(psi) in H^*
  bool cochain_multiplicative = true;       // EZ*(phi ⌣ psi) = EZ* phi ⌣ EZ* psi exactly
  std::size_t products_checked = 0;       // representative pairs
  std::size_t cochain_pairs_checked = 0;  // random cochain pairs
  std::optional<std::string> failure;

  bool ok() const {
    return betti_set == betti_diagonal && cocycles_preserved && isomorphism && structure_constants_agree &&
           cochain_multiplicative;
  }
};

// Compares H^*(X^D) and H^*(X) through EZ*, on normalized cochains over a
// field, in degrees 0..cap-1.
EzRingReport verify_ez_ring_iso(const msets::MSetPtr& set, const Ring& field, int cap);

struct MasseyReport {
  int degrees[3] = {0, 0, 0};
  std::vector<Coefficient> a, b, c;  // class coordinates
  Cochain representative;            // u ⌣ c + (-1)^(|a|+1) a ⌣ v
  std::vector<Coefficient> coords;   // class of the representative
  std::size_t indeterminacy_dimension = 0;
  bool vanishes = false;             // representative lies in a·H + H·c

  explicit MasseyReport(const Ring& ring) : representative(ring, 0) {}
};

// <a, b, c> for cocycles given by class coordinates. Throws NotExact unless
// [a][b] = 0 and [b][c] = 0. The bounding cochains come from the model's
// deterministic solver.
MasseyReport massey_triple(const CohomologyModel& model, int p, const std::vector<Coefficient>& a, int q,
                           const std::vector<Coefficient>& b, int r, const std::vector<Coefficient>& c);

struct MasseySweep {
  std::size_t admissible = 0;
  std::size_t vanishing = 0;
  std::vector<MasseyReport> nonvanishing;
  bool exhaustive = false;  // every class triple was tried (small finite fields)
};

// Every admissible triple of positive degrees with p+q+r-1 <= top degree.
// Over a small finite field all class triples are tried; otherwise, for each
// basis class a, a basis of its annihilator supplies b, and a basis of the
// annihilator of b supplies c.
MasseySweep massey_sweep(const CohomologyModel& model);

}  // namespace multichain::cohomtools
