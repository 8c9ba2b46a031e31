#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "multichain/complexes/complex.hpp"
#include "multichain/ezaw/shuffle.hpp"
#include "multichain/ezaw/tensor.hpp"
#include "multichain/msets/instances.hpp"

namespace multichain::ezaw {

using complexes::ChainMode;
using complexes::Cochain;
using complexes::ComplexView;

// X(pi_1, ..., pi_k)(x): in each direction l, apply s^l_j for every j with
// pi_l(j+1) = pi_l(j), smallest j first. The result is a multisimplex of
// degree (n, ..., n), n = |x|.
Multisimplex apply_shuffle(const MSet& set, const Multisimplex& x, const Shuffle& s);

// EZ(x) = sum over shuffles of sgn(pi) X(pi_1, ..., pi_k)(x), as a chain on
// the diagonal (degree (n)). Normalized mode drops degenerate inputs and
// outputs.
Chain ez_multisimplicial(const msets::Diagonal& diagonal, const Chain& c, ChainMode mode = ChainMode::Full);

// EZ(x_1 ⊗ ... ⊗ x_k) for simplices x_l of the factors of `product`: the
// multisimplicial EZ of the tuple, read on the diagonal of the product.
Chain ez_tensor(const msets::Diagonal& product_diagonal, const std::vector<Multisimplex>& simplices,
                const Ring& ring, ChainMode mode = ChainMode::Full);

// AW(x) = sum_i x|_i ⊗ _{n-i}|x for a simplex of a 1-fold set.
TensorChain aw_simplicial(const MSet& set, const Chain& c);

// AW(x) = sum over 0 <= i <= a of (-1)^(sum_{l<h} i_h (a_l - i_l))
// front(i) ⊗ back(a - i).
TensorChain aw_multisimplicial(const MSet& set, const Chain& c);

// The sign of the (i_1, ..., i_k) summand of AW(x) for x of degree a.
int aw_sign(const MultiIndex& a, const MultiIndex& i);

// (EZ ⊗ EZ)(t), both factors sent to the diagonal.
TensorChain ez_tensor_both(const msets::Diagonal& diagonal, const TensorChain& t, ChainMode mode = ChainMode::Full);

// (AW ⊗ id) AW(x) and (id ⊗ AW) AW(x), using the multisimplicial AW.
std::pair<Tensor<3>, Tensor<3>> aw_coassociativity_sides(const MSet& set, const Chain& c);

// (alpha ⌣ beta)(x) = sum over AW summands of bidegree (p, q) of
// sign * alpha(front) * beta(back), on every basis element of degree p+q.
// For a 1-fold set this is the classical cup product.
Cochain cup(const ComplexView& view, const Cochain& alpha, const Cochain& beta);

// The same formula on one multisimplex, for cochains given as functions.
using CochainFunction = std::function<Coefficient(const Multisimplex&)>;
Coefficient cup_evaluate(const MSet& set, const Ring& ring, const CochainFunction& alpha, int p,
                         const CochainFunction& beta, const Multisimplex& x);

// (EZ* phi)(x) = phi(EZ(x)) for x in the basis of `view` in degree |phi|.
Cochain ez_dual(const ComplexView& view, const msets::Diagonal& diagonal, const Cochain& phi);

struct SquareReport {
  bool equal = false;
  TensorChain aw_of_ez;      // AW_simp(EZ(x))
  TensorChain ez_of_aw;      // (EZ ⊗ EZ)(AW_msimp(x))
  std::size_t summands = 0;  // of AW_simp(EZ(x))
  std::size_t with_degenerate_factor = 0;
};

// Compares both paths around the EZ/AW square on x, with signs.
SquareReport verify_square(const msets::Diagonal& diagonal, const Multisimplex& x, const Ring& ring);

}  // namespace multichain::ezaw
