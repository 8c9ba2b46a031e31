#include "multichain/exactlin/linalg.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "multichain/error.hpp"

namespace multichain::exactlin {

namespace {

// Working copy of an integer matrix with a column index, used by the Smith
// normal form elimination.
class IntWork {
 public:
  explicit IntWork(const SparseMatrix& m) : rows_(m.rows()), col_rows_(m.cols()) {
    m.for_each([&](std::size_t r, std::size_t c, const Coefficient& v) {
      rows_[r].emplace_hint(rows_[r].end(), c, v.value().get_num());
      col_rows_[c].insert(r);
    });
  }

  std::size_t row_count() const { return rows_.size(); }
  const std::map<std::size_t, mpz_class>& row(std::size_t r) const { return rows_[r]; }
  const std::set<std::size_t>& col(std::size_t c) const { return col_rows_[c]; }

  const mpz_class& at(std::size_t r, std::size_t c) const { return rows_[r].at(c); }

  // row[target] -= q * row[source]
  void row_sub(std::size_t target, const mpz_class& q, std::size_t source) {
    auto& dst = rows_[target];
    for (const auto& [c, v] : rows_[source]) {
      auto it = dst.find(c);
      if (it == dst.end()) {
        dst.emplace(c, -q * v);
        col_rows_[c].insert(target);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          dst.erase(it);
          col_rows_[c].erase(target);
        }
      }
    }
  }

  // Entry (r, c) -= q * (r, source_col); only row r is touched because the
  // pivot column has already been cleared outside the pivot row.
  void entry_sub(std::size_t r, std::size_t c, const mpz_class& q, const mpz_class& pivot) {
    auto& row = rows_[r];
    auto it = row.find(c);
    it->second -= q * pivot;
    if (it->second == 0) {
      row.erase(it);
      col_rows_[c].erase(r);
    }
  }

  void drop_row(std::size_t r) {
    for (const auto& [c, v] : rows_[r]) col_rows_[c].erase(r);
    rows_[r].clear();
  }

 private:
  std::vector<std::map<std::size_t, mpz_class>> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
};

using Position = std::pair<std::size_t, std::size_t>;

// Smaller absolute value wins; ties go to the lexicographically smaller position.
bool better_pivot(const mpz_class& value, Position pos, const std::optional<std::pair<mpz_class, Position>>& best) {
  if (!best) return true;
  int cmp = mpz_cmpabs(value.get_mpz_t(), best->first.get_mpz_t());
  return cmp < 0 || (cmp == 0 && pos < best->second);
}

}  // namespace

std::vector<mpz_class> smith_normal_form(const SparseMatrix& m) {
  if (m.ring().kind() != RingKind::Integers)
    throw RingMismatch("Smith normal form needs a matrix over Z, got " + m.ring().name());
  IntWork work(m);
  std::vector<mpz_class> diagonal;

  for (;;) {
    std::optional<std::pair<mpz_class, Position>> best;
    for (std::size_t r = 0; r < work.row_count(); ++r)
      for (const auto& [c, v] : work.row(r))
        if (better_pivot(v, {r, c}, best)) best = std::make_pair(v, Position{r, c});
    if (!best) break;

    auto [pr, pc] = best->second;
    for (;;) {
      // Clear the pivot column below/above the pivot with row operations.
      std::vector<std::size_t> others;
      for (std::size_t r : work.col(pc))
        if (r != pr) others.push_back(r);
      for (std::size_t r : others) {
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), work.at(r, pc).get_mpz_t(), work.at(pr, pc).get_mpz_t());
        if (q != 0) work.row_sub(r, q, pr);
      }
      std::optional<std::pair<mpz_class, Position>> next;
      for (std::size_t r : work.col(pc))
        if (r != pr && better_pivot(work.at(r, pc), {r, pc}, next)) next = std::make_pair(work.at(r, pc), Position{r, pc});
      if (next) {
        std::tie(pr, pc) = next->second;
        continue;
      }

      // Column is clear; clear the pivot row with column operations.
      const mpz_class pivot = work.at(pr, pc);
      std::vector<std::size_t> cols;
      for (const auto& [c, v] : work.row(pr))
        if (c != pc) cols.push_back(c);
      for (std::size_t c : cols) {
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), work.at(pr, c).get_mpz_t(), pivot.get_mpz_t());
        if (q != 0) work.entry_sub(pr, c, q, pivot);
      }
      for (const auto& [c, v] : work.row(pr))
        if (c != pc && better_pivot(v, {pr, c}, next)) next = std::make_pair(v, Position{pr, c});
      if (next) {
        std::tie(pr, pc) = next->second;
        continue;
      }
      break;
    }
    diagonal.push_back(abs(work.at(pr, pc)));
    work.drop_row(pr);
  }

  // Turn the diagonal into a divisor chain: (a, b) -> (gcd, lcm) pairwise.
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      mpz_class g = gcd(diagonal[i], diagonal[j]);
      mpz_class l = lcm(diagonal[i], diagonal[j]);
      diagonal[i] = g;
      diagonal[j] = l;
    }
  return diagonal;
}

Echelon::Echelon(Ring field) : field_(field) {
  if (!field.is_field()) throw NotAField("echelon form needs a field, got " + field.name());
}

Echelon::Reduction Echelon::reduce(SparseVector v, SparseVector tag) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t key = it->first;
    const Coefficient c = -it->second;
    axpy(v, c, pivot->second.vec);
    axpy(tag, c, pivot->second.tag);
    it = v.upper_bound(key);
  }
  return {std::move(v), std::move(tag)};
}

Echelon::Reduction Echelon::insert(SparseVector v, SparseVector tag) {
  for (auto& [i, c] : v) c = c.in(field_);
  for (auto& [i, c] : tag) c = c.in(field_);
  Reduction red = reduce(std::move(v), std::move(tag));
  if (red.residual.empty()) return red;
  const Coefficient scale = red.residual.begin()->second.inverse();
  Row row{red.residual, red.tag};
  for (auto& [i, c] : row.vec) c *= scale;
  for (auto& [i, c] : row.tag) c *= scale;
  rows_.emplace(row.vec.begin()->first, std::move(row));
  return red;
}

std::size_t rank(const SparseMatrix& m) {
  const Ring field = m.ring().fraction_field();
  Echelon ech(field);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row;
    for (const auto& [c, v] : m.row(r)) row.emplace_hint(row.end(), c, v.in(field));
    ech.insert(std::move(row));
  }
  return ech.rank();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  const Ring field = m.ring().fraction_field();
  const SparseMatrix columns = m.transpose().over(field);
  Echelon ech(field);
  std::vector<SparseVector> basis;
  for (std::size_t c = 0; c < columns.rows(); ++c) {
    SparseVector tag{{c, Coefficient(field, 1)}};
    auto red = ech.insert(columns.row(c), std::move(tag));
    if (red.residual.empty()) basis.push_back(std::move(red.tag));
  }
  return basis;
}

}  // namespace multichain::exactlin
