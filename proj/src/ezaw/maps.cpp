#include "multichain/ezaw/maps.hpp"

#include <map>

#include "multichain/error.hpp"

namespace multichain::ezaw {

Multisimplex apply_shuffle(const MSet& set, const Multisimplex& x, const Shuffle& s) {
  if (s.profile() != x.degree) throw IndexOutOfRange("shuffle profile does not match the degree " + x.degree.to_string());
  Multisimplex y = x;
  for (int l = 0; l < s.k(); ++l) {
    const auto pi = s.monotone_map(l);
    for (std::size_t j = 0; j + 1 < pi.size(); ++j)
      if (pi[j + 1] == pi[j]) y = set.degeneracy(y, l, static_cast<int>(j));
  }
  return y;
}

namespace {

class ShuffleCache {
 public:
  const std::vector<Shuffle>& get(const MultiIndex& profile) {
    auto it = cache_.find(profile);
    if (it == cache_.end()) it = cache_.emplace(profile, enumerate_shuffles(profile)).first;
    return it->second;
  }

 private:
  std::map<MultiIndex, std::vector<Shuffle>> cache_;
};

void add_ez(const msets::Diagonal& diagonal, const Multisimplex& x, const Coefficient& coeff, ChainMode mode,
            ShuffleCache& cache, Chain& out) {
  const MSet& base = diagonal.base();
  if (mode == ChainMode::Normalized && base.is_degenerate(x)) return;
  for (const auto& s : cache.get(x.degree)) {
    Multisimplex y = diagonal.from_base(apply_shuffle(base, x, s));
    if (mode == ChainMode::Normalized && diagonal.is_degenerate(y)) continue;
    out.add(y, s.sign() > 0 ? coeff : -coeff);
  }
}

}  // namespace

Chain ez_multisimplicial(const msets::Diagonal& diagonal, const Chain& c, ChainMode mode) {
  ShuffleCache cache;
  Chain out(c.ring());
  for (const auto& [x, v] : c.terms()) add_ez(diagonal, x, v, mode, cache, out);
  return out;
}

Chain ez_tensor(const msets::Diagonal& product_diagonal, const std::vector<Multisimplex>& simplices, const Ring& ring,
                ChainMode mode) {
  const auto* product = dynamic_cast<const msets::ExternalProduct*>(&product_diagonal.base());
  if (!product) throw std::invalid_argument("ez_tensor needs the diagonal of an external product");
  return ez_multisimplicial(product_diagonal, Chain::of(ring, product->pack(simplices)), mode);
}

TensorChain aw_simplicial(const MSet& set, const Chain& c) {
  if (set.k() != 1) throw IndexOutOfRange("simplicial AW on a " + std::to_string(set.k()) + "-fold set");
  TensorChain out(c.ring());
  for (const auto& [x, v] : c.terms()) {
    const int n = x.degree[0];
    for (int i = 0; i <= n; ++i) out.add({set.front_face(x, MultiIndex{i}), set.back_face(x, MultiIndex{n - i})}, v);
  }
  return out;
}

int aw_sign(const MultiIndex& a, const MultiIndex& i) {
#ifdef MULTICHAIN_FLIP_AW_SIGN
  // Test fixture: a deliberately wrong build for negative controls.
  (void)a;
  (void)i;
  return 1;
#else
  long exponent = 0;
  long back_before = 0;  // sum over l < h of (a_l - i_l)
  for (int h = 0; h < a.k(); ++h) {
    exponent += static_cast<long>(i[h]) * back_before;
    back_before += a[h] - i[h];
  }
  return exponent % 2 == 0 ? 1 : -1;
#endif
}

TensorChain aw_multisimplicial(const MSet& set, const Chain& c) {
  TensorChain out(c.ring());
  for (const auto& [x, v] : c.terms())
    for (const auto& i : msets::multi_indices_below(x.degree))
      out.add({set.front_face(x, i), set.back_face(x, x.degree - i)}, aw_sign(x.degree, i) > 0 ? v : -v);
  return out;
}

TensorChain ez_tensor_both(const msets::Diagonal& diagonal, const TensorChain& t, ChainMode mode) {
  ShuffleCache cache;
  TensorChain out(t.ring());
  const Coefficient one(t.ring(), 1);
  for (const auto& [key, v] : t.terms()) {
    Chain left(t.ring()), right(t.ring());
    add_ez(diagonal, key[0], v, mode, cache, left);
    add_ez(diagonal, key[1], one, mode, cache, right);
    out += tensor_product(left, right);
  }
  return out;
}

std::pair<Tensor<3>, Tensor<3>> aw_coassociativity_sides(const MSet& set, const Chain& c) {
  Tensor<3> left(c.ring()), right(c.ring());
  const TensorChain outer = aw_multisimplicial(set, c);
  for (const auto& [key, v] : outer.terms()) {
    const TensorChain front = aw_multisimplicial(set, Chain::of(c.ring(), key[0]));
    for (const auto& [inner, u] : front.terms()) left.add({inner[0], inner[1], key[1]}, u * v);
    const TensorChain back = aw_multisimplicial(set, Chain::of(c.ring(), key[1]));
    for (const auto& [inner, u] : back.terms()) right.add({key[0], inner[0], inner[1]}, u * v);
  }
  return {std::move(left), std::move(right)};
}

Cochain cup(const ComplexView& view, const Cochain& alpha, const Cochain& beta) {
  if (alpha.ring() != view.ring() || beta.ring() != view.ring())
    throw RingMismatch("cup product of cochains over " + alpha.ring().name() + " and " + beta.ring().name() + " in a " +
                       view.ring().name() + " complex");
  const int p = alpha.degree(), q = beta.degree();
  const MSet& set = view.set();
  Cochain out(view.ring(), p + q);
  if (alpha.is_zero() || beta.is_zero()) return out;
  for (const auto& x : view.basis(p + q)) {
    Coefficient sum(view.ring());
    for (const auto& i : msets::multi_indices_below(x.degree)) {
      if (i.total() != p) continue;
      const Coefficient a = alpha.value(set.front_face(x, i));
      if (a.is_zero()) continue;
      const Coefficient b = beta.value(set.back_face(x, x.degree - i));
      if (b.is_zero()) continue;
      sum += aw_sign(x.degree, i) > 0 ? a * b : -(a * b);
    }
    out.set(x, sum);
  }
  return out;
}

Coefficient cup_evaluate(const MSet& set, const Ring& ring, const CochainFunction& alpha, int p,
                         const CochainFunction& beta, const Multisimplex& x) {
  Coefficient sum(ring);
  for (const auto& i : msets::multi_indices_below(x.degree)) {
    if (i.total() != p) continue;
    const Coefficient a = alpha(set.front_face(x, i));
    if (a.is_zero()) continue;
    const Coefficient ab = a * beta(set.back_face(x, x.degree - i));
    sum += aw_sign(x.degree, i) > 0 ? ab : -ab;
  }
  return sum;
}

Cochain ez_dual(const ComplexView& view, const msets::Diagonal& diagonal, const Cochain& phi) {
  if (phi.ring() != view.ring()) throw RingMismatch("EZ* of a " + phi.ring().name() + " cochain");
  Cochain out(view.ring(), phi.degree());
  if (phi.is_zero()) return out;
  ShuffleCache cache;
  for (const auto& x : view.basis(phi.degree())) {
    Chain ez(view.ring());
    add_ez(diagonal, x, Coefficient(view.ring(), 1), ChainMode::Full, cache, ez);
    out.set(x, phi.evaluate(ez));
  }
  return out;
}

SquareReport verify_square(const msets::Diagonal& diagonal, const Multisimplex& x, const Ring& ring) {
  SquareReport r{false, TensorChain(ring), TensorChain(ring), 0, 0};
  const Chain c = Chain::of(ring, x);
  r.aw_of_ez = aw_simplicial(diagonal, ez_multisimplicial(diagonal, c));
  r.ez_of_aw = ez_tensor_both(diagonal, aw_multisimplicial(diagonal.base(), c));
  r.equal = r.aw_of_ez == r.ez_of_aw;
  r.summands = r.aw_of_ez.size();
  for (const auto& [key, v] : r.aw_of_ez.terms())
    if (diagonal.is_degenerate(key[0]) || diagonal.is_degenerate(key[1])) ++r.with_degenerate_factor;
  return r;
}

}  // namespace multichain::ezaw
