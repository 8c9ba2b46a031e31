#include "multichain/cohomtools/products.hpp"

#include <random>

#include "multichain/error.hpp"
#include "multichain/ezaw/maps.hpp"

namespace multichain::cohomtools {

using exactlin::SparseVector;

namespace {

SparseVector as_sparse(const std::vector<Coefficient>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace(i, v[i]);
  return out;
}

bool all_zero(const std::vector<Coefficient>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

constexpr int kRandomPairs = 8;

EzRingReport verify_ez_ring_iso(const msets::MSetPtr& set, const Ring& field, int cap) {
  if (!field.is_field()) throw NotAField("ring comparison needs a field, got " + field.name());
  const int top = cap - 1;
  auto diagonal = std::make_shared<msets::Diagonal>(set);
  ComplexView view_x(set, field, complexes::ChainMode::Normalized, cap);
  ComplexView view_d(diagonal, field, complexes::ChainMode::Normalized, cap);
  CohomologyModel model_x(view_x, top), model_d(view_d, top);

  EzRingReport r;
  auto fail = [&](bool& flag, std::string why) {
    flag = false;
    if (!r.failure) r.failure = std::move(why);
  };

  // M_n: columns are the X-classes of EZ* of the diagonal representatives.
  std::vector<std::vector<std::vector<Coefficient>>> columns(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    r.betti_set.push_back(model_x.betti(n));
    r.betti_diagonal.push_back(model_d.betti(n));
    exactlin::SparseMatrix m(field, model_x.betti(n), model_d.betti(n));
    for (std::size_t j = 0; j < model_d.betti(n); ++j) {
      const auto pulled = ezaw::ez_dual(view_x, *diagonal, model_d.representatives(n)[j]);
      auto coords = model_x.class_of(pulled);
      if (!coords) {
        fail(r.cocycles_preserved, "EZ* of a degree " + std::to_string(n) + " cocycle is not a cocycle");
        coords = std::vector<Coefficient>(model_x.betti(n), Coefficient(field));
      }
      for (std::size_t i = 0; i < coords->size(); ++i) m.set(i, j, (*coords)[i]);
      columns[static_cast<std::size_t>(n)].push_back(std::move(*coords));
    }
    if (model_x.betti(n) != model_d.betti(n) || exactlin::rank(m) != model_d.betti(n))
      fail(r.isomorphism, "EZ* is not invertible on H^" + std::to_string(n));
  }
  if (!r.isomorphism) return r;

  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q <= top; ++q)
      for (std::size_t i = 0; i < model_d.betti(p); ++i)
        for (std::size_t j = 0; j < model_d.betti(q); ++j) {
          ++r.products_checked;
          const auto& phi = model_d.representatives(p)[i];
          const auto& psi = model_d.representatives(q)[j];
          const Cochain prod_d = ezaw::cup(view_d, phi, psi);
          const Cochain prod_x =
              ezaw::cup(view_x, ezaw::ez_dual(view_x, *diagonal, phi), ezaw::ez_dual(view_x, *diagonal, psi));
          if (ezaw::ez_dual(view_x, *diagonal, prod_d) != prod_x)
            fail(r.cochain_multiplicative, "EZ*(phi ⌣ psi) differs from EZ* phi ⌣ EZ* psi in degrees " +
                                               std::to_string(p) + "," + std::to_string(q));
          const auto coords_d = model_d.class_of(prod_d);
          const auto coords_x = model_x.class_of(prod_x);
          if (!coords_d || !coords_x) {
            fail(r.structure_constants_agree, "cup product of cocycles is not a cocycle");
            continue;
          }
          // M_{p+q} applied to the diagonal structure constants.
          std::vector<Coefficient> mapped(model_x.betti(p + q), Coefficient(field));
          for (std::size_t c = 0; c < coords_d->size(); ++c)
            for (std::size_t row = 0; row < mapped.size(); ++row)
              mapped[row] += columns[static_cast<std::size_t>(p + q)][c][row] * (*coords_d)[c];
          if (mapped != *coords_x)
            fail(r.structure_constants_agree, "structure constants differ in degrees " + std::to_string(p) + "," +
                                                  std::to_string(q));
        }

  // Cochain level beyond the representatives: seeded random pairs in every
  // degree pair, cocycles or not.
  std::mt19937_64 rng(0x5eed);
  auto random_cochain = [&](int n) {
    Cochain a(field, n);
    for (const auto& g : view_d.basis(n)) a.add(g, Coefficient(field, std::uniform_int_distribution<long>(-2, 2)(rng)));
    return a;
  };
  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q <= top; ++q)
      for (int trial = 0; trial < kRandomPairs; ++trial) {
        ++r.cochain_pairs_checked;
        const Cochain phi = random_cochain(p), psi = random_cochain(q);
        if (ezaw::ez_dual(view_x, *diagonal, ezaw::cup(view_d, phi, psi)) !=
            ezaw::cup(view_x, ezaw::ez_dual(view_x, *diagonal, phi), ezaw::ez_dual(view_x, *diagonal, psi)))
          fail(r.cochain_multiplicative, "EZ* is not multiplicative on random cochains in degrees " +
                                             std::to_string(p) + "," + std::to_string(q));
      }
  return r;
}

MasseyReport massey_triple(const CohomologyModel& model, int p, const std::vector<Coefficient>& a, int q,
                           const std::vector<Coefficient>& b, int r, const std::vector<Coefficient>& c) {
  const ComplexView& view = model.view();
  const Ring& field = view.ring();
  const int n = p + q + r - 1;
  if (n > model.max_degree()) throw CapTooLow("Massey product lands in degree " + std::to_string(n) + " above the cap");
  const Cochain ca = model.cocycle_of(p, a), cb = model.cocycle_of(q, b), cc = model.cocycle_of(r, c);
  const auto u = model.bounding_cochain(ezaw::cup(view, ca, cb));
  if (!u) throw NotExact("[a][b] is not zero");
  const auto v = model.bounding_cochain(ezaw::cup(view, cb, cc));
  if (!v) throw NotExact("[b][c] is not zero");

  MasseyReport out(field);
  out.degrees[0] = p;
  out.degrees[1] = q;
  out.degrees[2] = r;
  out.a = a;
  out.b = b;
  out.c = c;
  out.representative = ezaw::cup(view, *u, cc);
  const Coefficient sign(field, p % 2 == 0 ? -1 : 1);  // (-1)^(|a|+1)
  out.representative += ezaw::cup(view, ca, *v).scaled(sign);
  const auto coords = model.class_of(out.representative);
  if (!coords) throw std::logic_error("Massey representative is not a cocycle");
  out.coords = *coords;

  // Indeterminacy a·H^{q+r-1} + H^{p+q-1}·c.
  exactlin::Echelon span(field);
  for (const auto& y : model.representatives(q + r - 1))
    span.insert(as_sparse(*model.class_of(ezaw::cup(view, ca, y))));
  for (const auto& x : model.representatives(p + q - 1))
    span.insert(as_sparse(*model.class_of(ezaw::cup(view, x, cc))));
  out.indeterminacy_dimension = span.rank();
  out.vanishes = span.in_span(as_sparse(out.coords));
  return out;
}

namespace {

// All coordinate vectors of a dim-dimensional space over Z/p.
std::vector<std::vector<Coefficient>> all_vectors(const Ring& field, std::size_t dim) {
  std::vector<std::vector<Coefficient>> out;
  std::vector<Coefficient> v(dim, Coefficient(field));
  const long p = field.modulus();
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < dim) {
      const long next = v[i].value().get_num().get_si() + 1;
      if (next < p) {
        v[i] = Coefficient(field, next);
        break;
      }
      v[i++] = Coefficient(field);
    }
    if (i == dim) break;
  }
  return out;
}

std::vector<std::vector<Coefficient>> unit_vectors(const Ring& field, std::size_t dim) {
  std::vector<std::vector<Coefficient>> out;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Coefficient> v(dim, Coefficient(field));
    v[i] = Coefficient(field, 1);
    out.push_back(std::move(v));
  }
  return out;
}

// Basis of {y in H^s : [x][y] = 0} (left = true) or {y : [y][x] = 0}.
std::vector<std::vector<Coefficient>> annihilator(const CohomologyModel& model, int px,
                                                  const std::vector<Coefficient>& x, int s, bool left) {
  const Ring& field = model.view().ring();
  const Cochain cx = model.cocycle_of(px, x);
  const std::size_t dim = model.betti(s);
  const std::size_t target_dim = model.betti(px + s);
  // Matrix of y -> class of the product, columns indexed by the basis of H^s.
  exactlin::SparseMatrix m(field, target_dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Cochain& y = model.representatives(s)[j];
    const auto coords = *model.class_of(left ? ezaw::cup(model.view(), cx, y) : ezaw::cup(model.view(), y, cx));
    for (std::size_t i = 0; i < coords.size(); ++i) m.set(i, j, coords[i]);
  }
  std::vector<std::vector<Coefficient>> out;
  for (const auto& k : exactlin::kernel_basis(m)) {
    std::vector<Coefficient> v(dim, Coefficient(field));
    for (const auto& [i, c] : k) v[i] = c;
    out.push_back(std::move(v));
  }
  return out;
}

bool product_vanishes(const CohomologyModel& model, int p, const std::vector<Coefficient>& a, int q,
                      const std::vector<Coefficient>& b) {
  const auto coords = model.class_of(ezaw::cup(model.view(), model.cocycle_of(p, a), model.cocycle_of(q, b)));
  return all_zero(*coords);
}

}  // namespace

MasseySweep massey_sweep(const CohomologyModel& model) {
  const Ring& field = model.view().ring();
  MasseySweep sweep;
  constexpr std::size_t kExhaustiveLimit = 4096;
  const int top = model.max_degree();

  bool exhaustive = field.kind() == exactlin::RingKind::ModP;
  for (int s = 1; s <= top && exhaustive; ++s) {
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), field.modulus(), model.betti(s));
    if (count > kExhaustiveLimit) exhaustive = false;
  }
  sweep.exhaustive = exhaustive;

  auto record = [&](int p, const std::vector<Coefficient>& a, int q, const std::vector<Coefficient>& b, int r,
                    const std::vector<Coefficient>& c) {
    ++sweep.admissible;
    MasseyReport report = massey_triple(model, p, a, q, b, r, c);
    if (report.vanishes)
      ++sweep.vanishing;
    else
      sweep.nonvanishing.push_back(std::move(report));
  };

  for (int p = 1; p <= top; ++p)
    for (int q = 1; p + q - 1 <= top; ++q)
      for (int r = 1; p + q + r - 1 <= top; ++r) {
        if (exhaustive) {
          const auto as = all_vectors(field, model.betti(p));
          const auto bs = all_vectors(field, model.betti(q));
          const auto cs = all_vectors(field, model.betti(r));
          for (const auto& a : as)
            for (const auto& b : bs) {
              if (!product_vanishes(model, p, a, q, b)) continue;
              for (const auto& c : cs)
                if (product_vanishes(model, q, b, r, c)) record(p, a, q, b, r, c);
            }
          continue;
        }
        for (const auto& a : unit_vectors(field, model.betti(p)))
          for (const auto& b : annihilator(model, p, a, q, true))
            for (const auto& c : annihilator(model, q, b, r, true)) record(p, a, q, b, r, c);
      }
  return sweep;
}

}  // namespace multichain::cohomtools
