#include "multichain/exactlin/homology.hpp"

#include <stdexcept>
#include <string>

#include "multichain/error.hpp"
#include "multichain/exactlin/linalg.hpp"

namespace multichain::exactlin {

HomologySummary homology_of_pair(const SparseMatrix& d_in, const SparseMatrix& d_out, Ring ring, int degree) {
  if (d_in.rows() != d_out.cols())
    throw std::invalid_argument("homology_of_pair: d_in has " + std::to_string(d_in.rows()) +
                                " rows but d_out has " + std::to_string(d_out.cols()) + " columns");
  const SparseMatrix in = d_in.over(ring);
  const SparseMatrix out = d_out.over(ring);
  if (!(out * in).is_zero()) throw CompositionNotZero("d_out * d_in is not zero in degree " + std::to_string(degree));

  HomologySummary summary;
  summary.degree = degree;
  const std::size_t n = in.rows();

  if (ring.kind() == RingKind::Integers) {
    const auto factors = smith_normal_form(in);
    const std::size_t rank_in = factors.size();
    const std::size_t rank_out = rank(out);
    summary.betti = n - rank_out - rank_in;
    for (const auto& f : factors)
      if (f > 1) summary.torsion.push_back(f);
  } else {
    summary.betti = n - rank(out) - rank(in);
  }
  return summary;
}

}  // namespace multichain::exactlin
