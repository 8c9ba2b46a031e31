#pragma once

#include <optional>
#include <vector>

#include "multichain/complexes/complex.hpp"
#include "multichain/exactlin/linalg.hpp"

namespace multichain::cohomtools {

using complexes::Chain;
using complexes::Cochain;
using complexes::ComplexView;
using exactlin::Coefficient;
using exactlin::Ring;

// Cohomology of a complex over a field in degrees 0..max_degree, with chosen
// representative cocycles, a solver for delta u = w and coordinates of
// cocycles in the chosen basis. Needs view.cap() >= max_degree + 1; the view
// must outlive the model.
class CohomologyModel {
 public:
  CohomologyModel(const ComplexView& view, int max_degree);

  const ComplexView& view() const { return view_; }
  int max_degree() const { return max_degree_; }

  std::size_t betti(int n) const { return degree(n).representatives.size(); }
  const std::vector<Cochain>& representatives(int n) const { return degree(n).representatives; }

  bool is_cocycle(const Cochain& w) const;
  // Some u with delta u = w, if w is a coboundary.
  std::optional<Cochain> bounding_cochain(const Cochain& w) const;
  // Coordinates of [w] in the representative basis; nullopt unless w is a
  // cocycle.
  std::optional<std::vector<Coefficient>> class_of(const Cochain& w) const;
  // The cocycle sum_i coords[i] * representative_i.
  Cochain cocycle_of(int n, const std::vector<Coefficient>& coords) const;

 private:
  struct Degree {
    exactlin::Echelon coboundaries;  // rows of boundary_n, tagged by basis(n-1)
    exactlin::Echelon classes;       // coboundaries, then representatives tagged by class
    std::vector<Cochain> representatives;
  };
  const Degree& degree(int n) const;

  const ComplexView& view_;
  int max_degree_;
  std::vector<Degree> degrees_;
};

struct ClassProduct {
  int p = 0;
  std::size_t i = 0;
  int q = 0;
  std::size_t j = 0;
  std::vector<Coefficient> coords;  // of rep(p,i) ⌣ rep(q,j) in degree p+q
};

struct RingPresentation {
  Ring ring = Ring::rationals();
  // Per degree 0..max: Betti number and (over Z) torsion of H^n.
  std::vector<exactlin::HomologySummary> groups;
  std::vector<std::vector<Cochain>> representatives;
  std::vector<ClassProduct> products;
  bool has_products = false;

  std::vector<std::size_t> betti() const;
  const ClassProduct* product(int p, std::size_t i, int q, std::size_t j) const;
};

// H^*(view) in degrees 0..max_degree. Over a field this includes
// representatives and all structure constants with p+q <= max_degree. Over Z
// only Betti numbers and torsion are available; asking for products there
// throws NotAField.
RingPresentation cohomology_ring(const ComplexView& view, int max_degree, bool with_products = true);

}  // namespace multichain::cohomtools
