#pragma once

#include <array>
#include <map>
#include <string>

#include "multichain/complexes/complex.hpp"
#include "multichain/error.hpp"

namespace multichain::ezaw {

using complexes::Chain;
using complexes::Coefficient;
using complexes::Ring;
using msets::MSet;
using msets::Multisimplex;

// Element of C_*(X_1) ⊗ ... ⊗ C_*(X_N): a combination of N-tuples of
// multisimplices. Zero coefficients are never stored.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Multisimplex, N>;
  using Terms = std::map<Key, Coefficient>;

  explicit Tensor(Ring ring) : ring_(ring) {}

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& key, const Coefficient& c) {
    if (c.ring() != ring_) throw RingMismatch("tensor over " + ring_.name() + " given a " + c.ring().name() + " coefficient");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void add(const Key& key, long c) { add(key, Coefficient(ring_, c)); }
  void add(const Tensor& other, const Coefficient& c) {
    for (const auto& [key, v] : other.terms_) add(key, v * c);
  }

  Coefficient coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coefficient(ring_) : it->second;
  }

  Tensor& operator+=(const Tensor& other) {
    add(other, Coefficient(ring_, 1));
    return *this;
  }
  Tensor& operator-=(const Tensor& other) {
    add(other, Coefficient(ring_, -1));
    return *this;
  }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

  Tensor over(Ring target) const {
    Tensor out(target);
    for (const auto& [key, v] : terms_) out.add(key, v.in(target));
    return out;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

 private:
  Ring ring_;
  Terms terms_;
};

using TensorChain = Tensor<2>;

// a ⊗ b  ->  sum of coeff(a) coeff(b) a_i ⊗ b_j
TensorChain tensor_product(const Chain& a, const Chain& b);

// Koszul differential: d(a ⊗ b) = da ⊗ b + (-1)^|a| a ⊗ db, with |a| the
// total degree of a.
TensorChain tensor_boundary(const MSet& left, const MSet& right, const TensorChain& t,
                            complexes::ChainMode mode = complexes::ChainMode::Full);

// Drops every term with a degenerate factor.
TensorChain normalize(const MSet& left, const MSet& right, const TensorChain& t);

// "123⊗12321 + 1231⊗2321"
std::string format_tensor(const MSet& left, const MSet& right, const TensorChain& t);
std::string format_tensor(const MSet& set, const Tensor<3>& t);

}  // namespace multichain::ezaw
