#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "multichain/complexes/chain.hpp"
#include "multichain/exactlin/homology.hpp"
#include "multichain/exactlin/sparse.hpp"

namespace multichain::complexes {

using msets::MSetPtr;

enum class ChainMode { Full, Normalized };

// The signed differential of C_*(X): sum over directions l and faces t of
// (-1)^(t + a_1 + ... + a_{l-1}) d^l_t. Directions of degree zero contribute
// nothing. In normalized mode degenerate terms are dropped afterwards.
Chain boundary(const MSet& set, const Chain& c, ChainMode mode = ChainMode::Full);
Chain boundary(const MSet& set, const Multisimplex& x, const Ring& ring, ChainMode mode = ChainMode::Full);

// Drops degenerate terms (the projection C_* -> N_*).
Chain normalize(const MSet& set, const Chain& c);

// C_*(X) or N_*(X) over a ring, truncated at total degree `cap`. Bases are
// the enumerations of X at every multidegree of the given total, in the order
// of multi_indices_of_total and then of enumerate().
class ComplexView {
 public:
  ComplexView(MSetPtr set, Ring ring, ChainMode mode, int cap);

  const MSet& set() const { return *set_; }
  const MSetPtr& set_ptr() const { return set_; }
  const Ring& ring() const { return ring_; }
  ChainMode mode() const { return mode_; }
  int cap() const { return cap_; }

  // Empty for n < 0; CapTooLow for n > cap.
  const std::vector<Multisimplex>& basis(int n) const;
  std::optional<std::size_t> index_of(int n, const Multisimplex& x) const;

  Chain boundary(const Chain& c) const { return complexes::boundary(*set_, c, mode_); }
  Chain project(const Chain& c) const { return mode_ == ChainMode::Normalized ? normalize(*set_, c) : c; }

  // Matrix of C_n -> C_{n-1}: rows index basis(n-1), columns basis(n).
  exactlin::SparseMatrix boundary_matrix(int n) const;

  // delta alpha = alpha o boundary, of degree n+1.
  Cochain coboundary(const Cochain& alpha) const;

  exactlin::SparseVector to_vector(const Chain& c, int n) const;
  Chain to_chain(const exactlin::SparseVector& v, int n) const;
  exactlin::SparseVector to_vector(const Cochain& alpha) const;
  Cochain to_cochain(const exactlin::SparseVector& v, int n) const;

  // Homology in degrees lo..hi; needs cap >= hi + 1. Degrees are computed in
  // parallel, bounded by MULTICHAIN_THREADS when set.
  std::vector<exactlin::HomologySummary> homology(int lo, int hi) const;

 private:
  struct Basis {
    std::vector<Multisimplex> elements;
    std::map<Multisimplex, std::size_t> index;
  };
  const Basis& basis_entry(int n) const;

  MSetPtr set_;
  Ring ring_;
  ChainMode mode_;
  int cap_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Basis>> bases_;
};

// Worker count for internal parallel loops: MULTICHAIN_THREADS if set and
// positive, otherwise the hardware concurrency.
unsigned thread_budget();

}  // namespace multichain::complexes
