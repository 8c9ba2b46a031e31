#include "multichain/exactlin/sparse.hpp"

#include <string>

#include "multichain/error.hpp"

namespace multichain::exactlin {

void axpy(SparseVector& y, const Coefficient& a, const SparseVector& x) {
  if (a.is_zero()) return;
  auto hint = y.begin();
  for (const auto& [index, value] : x) {
    hint = y.lower_bound(index);
    if (hint != y.end() && hint->first == index) {
      hint->second += a * value;
      if (hint->second.is_zero()) hint = y.erase(hint);
    } else {
      Coefficient term = a * value;
      if (!term.is_zero()) hint = y.emplace_hint(hint, index, std::move(term));
    }
  }
}

SparseMatrix::SparseMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), cols_(cols), rows_(rows) {}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_)
    throw IndexOutOfRange("matrix index (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " +
                          std::to_string(rows_.size()) + "x" + std::to_string(cols_));
}

Coefficient SparseMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Coefficient(ring_) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Coefficient& value) {
  check_index(r, c);
  Coefficient v = value.in(ring_);
  if (v.is_zero())
    rows_[r].erase(c);
  else
    rows_[r].insert_or_assign(c, std::move(v));
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Coefficient& value) {
  check_index(r, c);
  Coefficient v = value.in(ring_);
  auto it = rows_[r].find(c);
  if (it == rows_[r].end()) {
    if (!v.is_zero()) rows_[r].emplace(c, std::move(v));
    return;
  }
  it->second += v;
  if (it->second.is_zero()) rows_[r].erase(it);
}

void SparseMatrix::for_each(const std::function<void(std::size_t, std::size_t, const Coefficient&)>& fn) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) fn(r, c, v);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(ring_, cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_hint(t.rows_[c].end(), r, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (ring_ != rhs.ring_) throw RingMismatch("matrix product over " + ring_.name() + " and " + rhs.ring_.name());
  if (cols_ != rhs.rows())
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(cols_) + " vs " +
                                std::to_string(rhs.rows()));
  SparseMatrix out(ring_, rows_.size(), rhs.cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [k, v] : rows_[r]) axpy(out.rows_[r], v, rhs.rows_[k]);
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

SparseMatrix SparseMatrix::over(Ring target) const {
  if (target == ring_) return *this;
  SparseMatrix out(target, rows_.size(), cols_);
  for_each([&](std::size_t r, std::size_t c, const Coefficient& v) { out.set(r, c, v.in(target)); });
  return out;
}

}  // namespace multichain::exactlin
