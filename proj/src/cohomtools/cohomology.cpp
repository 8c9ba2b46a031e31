#include "multichain/cohomtools/cohomology.hpp"

#include "multichain/error.hpp"
#include "multichain/exactlin/homology.hpp"
#include "multichain/ezaw/maps.hpp"

namespace multichain::cohomtools {

using exactlin::SparseVector;

CohomologyModel::CohomologyModel(const ComplexView& view, int max_degree) : view_(view), max_degree_(max_degree) {
  const Ring& field = view.ring();
  if (!field.is_field()) throw NotAField("cohomology bases need a field, got " + field.name());
  if (max_degree + 1 > view.cap())
    throw CapTooLow("cohomology through degree " + std::to_string(max_degree) + " needs cap >= " +
                    std::to_string(max_degree + 1));
  for (int n = 0; n <= max_degree; ++n) {
    Degree d{exactlin::Echelon(field), exactlin::Echelon(field), {}};
    // B^n is spanned by the rows of boundary_n: row y is delta of the
    // indicator of y.
    const auto into = view.boundary_matrix(n);
    for (std::size_t y = 0; y < into.rows(); ++y) {
      if (into.row(y).empty()) continue;
      d.coboundaries.insert(into.row(y), SparseVector{{y, Coefficient(field, 1)}});
      d.classes.insert(into.row(y));
    }
    // Z^n = left kernel of boundary_{n+1}.
    const auto out = view.boundary_matrix(n + 1);
    for (const auto& z : exactlin::kernel_basis(out.transpose())) {
      const std::size_t index = d.representatives.size();
      if (!d.classes.reduce(z).residual.empty()) {
        d.classes.insert(z, SparseVector{{index, Coefficient(field, 1)}});
        d.representatives.push_back(view.to_cochain(z, n));
      }
    }
    degrees_.push_back(std::move(d));
  }
}

const CohomologyModel::Degree& CohomologyModel::degree(int n) const {
  if (n < 0 || n > max_degree_)
    throw CapTooLow("cohomology degree " + std::to_string(n) + " outside 0.." + std::to_string(max_degree_));
  return degrees_[static_cast<std::size_t>(n)];
}

bool CohomologyModel::is_cocycle(const Cochain& w) const { return view_.coboundary(w).is_zero(); }

std::optional<Cochain> CohomologyModel::bounding_cochain(const Cochain& w) const {
  const auto r = degree(w.degree()).coboundaries.reduce(view_.to_vector(w));
  if (!r.residual.empty()) return std::nullopt;
  // w = sum c_i row_i and tag = -sum c_i tag_i, so u = -tag.
  Cochain u(view_.ring(), w.degree() - 1);
  for (const auto& [y, c] : r.tag) u.set(view_.basis(w.degree() - 1).at(y), -c);
  return u;
}

std::optional<std::vector<Coefficient>> CohomologyModel::class_of(const Cochain& w) const {
  if (!is_cocycle(w)) return std::nullopt;
  const auto& d = degree(w.degree());
  const auto r = d.classes.reduce(view_.to_vector(w));
  if (!r.residual.empty()) throw std::logic_error("cocycle outside the span of its class basis");
  std::vector<Coefficient> coords(d.representatives.size(), Coefficient(view_.ring()));
  for (const auto& [i, c] : r.tag) coords.at(i) = -c;
  return coords;
}

Cochain CohomologyModel::cocycle_of(int n, const std::vector<Coefficient>& coords) const {
  const auto& reps = representatives(n);
  Cochain w(view_.ring(), n);
  for (std::size_t i = 0; i < reps.size() && i < coords.size(); ++i) w += reps[i].scaled(coords[i]);
  return w;
}

std::vector<std::size_t> RingPresentation::betti() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.betti);
  return out;
}

const ClassProduct* RingPresentation::product(int p, std::size_t i, int q, std::size_t j) const {
  for (const auto& c : products)
    if (c.p == p && c.i == i && c.q == q && c.j == j) return &c;
  return nullptr;
}

RingPresentation cohomology_ring(const ComplexView& view, int max_degree, bool with_products) {
  RingPresentation out;
  out.ring = view.ring();
  if (!view.ring().is_field()) {
    if (with_products) throw NotAField("cup-product structure constants need a field, got " + view.ring().name());
    // H^n has the rank of H_n and the torsion of H_{n-1}.
    const auto homology = view.homology(0, max_degree);
    for (int n = 0; n <= max_degree; ++n) {
      exactlin::HomologySummary g;
      g.degree = n;
      g.betti = homology[static_cast<std::size_t>(n)].betti;
      if (n > 0) g.torsion = homology[static_cast<std::size_t>(n - 1)].torsion;
      out.groups.push_back(std::move(g));
    }
    return out;
  }
  CohomologyModel model(view, max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    out.groups.push_back({n, model.betti(n), {}});
    out.representatives.push_back(model.representatives(n));
  }
  if (!with_products) return out;
  out.has_products = true;
  for (int p = 0; p <= max_degree; ++p)
    for (int q = 0; p + q <= max_degree; ++q)
      for (std::size_t i = 0; i < model.betti(p); ++i)
        for (std::size_t j = 0; j < model.betti(q); ++j) {
          const Cochain prod = ezaw::cup(view, model.representatives(p)[i], model.representatives(q)[j]);
          auto coords = model.class_of(prod);
          if (!coords) throw std::logic_error("cup product of cocycles is not a cocycle");
          out.products.push_back({p, i, q, j, std::move(*coords)});
        }
  return out;
}

}  // namespace multichain::cohomtools
