#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "multichain/exactlin/coefficient.hpp"

namespace multichain::exactlin {

// Sparse vector keyed by basis index; never stores zeros.
using SparseVector = std::map<std::size_t, Coefficient>;

// y += a * x
void axpy(SparseVector& y, const Coefficient& a, const SparseVector& x);

// Row-major sparse matrix over a ring. No stored zeros; indices in range.
class SparseMatrix {
 public:
  SparseMatrix(Ring ring, std::size_t rows, std::size_t cols);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Coefficient at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Coefficient& value);
  void add(std::size_t r, std::size_t c, const Coefficient& value);

  const SparseVector& row(std::size_t r) const { return rows_.at(r); }

  // Visits entries in (row, col) lexicographic order.
  void for_each(const std::function<void(std::size_t, std::size_t, const Coefficient&)>& fn) const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  bool is_zero() const;

  // Entrywise image in another ring (see Coefficient::in).
  SparseMatrix over(Ring target) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.ring_ == b.ring_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const;

  Ring ring_;
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

}  // namespace multichain::exactlin
