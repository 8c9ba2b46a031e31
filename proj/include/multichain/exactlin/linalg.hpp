#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "multichain/exactlin/sparse.hpp"

namespace multichain::exactlin {

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix (units
// included, zeros omitted). Pivot choice: smallest absolute nonzero entry,
// ties broken by (row, col). Throws RingMismatch unless the matrix is over Z.
std::vector<mpz_class> smith_normal_form(const SparseMatrix& m);

// Rank over the fraction field of the matrix's ring.
std::size_t rank(const SparseMatrix& m);

// Incremental row echelon form over a field. Every stored row has a distinct
// leading index with leading coefficient one. Rows carry a "tag" vector that
// records which combination of inserted vectors produced them, which is how
// kernels, span membership and linear solves are read off.
class Echelon {
 public:
  struct Reduction {
    SparseVector residual;
    SparseVector tag;
  };

  explicit Echelon(Ring field);

  const Ring& field() const { return field_; }
  std::size_t rank() const { return rows_.size(); }

  // Fully reduces v against the stored rows, mirroring every row operation on
  // tag: residual = v - sum c_i row_i and tag = tag - sum c_i tag_i. The
  // residual is empty iff v lies in the row space.
  Reduction reduce(SparseVector v, SparseVector tag = {}) const;

  // Reduces v; a nonzero residual is normalised and stored as a new row.
  Reduction insert(SparseVector v, SparseVector tag = {});

  bool in_span(const SparseVector& v) const { return reduce(v).residual.empty(); }

 private:
  struct Row {
    SparseVector vec;
    SparseVector tag;
  };

  Ring field_;
  std::map<std::size_t, Row> rows_;
};

// Basis of {x : m x = 0} over the fraction field.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

}  // namespace multichain::exactlin
