#pragma once

#include <vector>

#include "multichain/msets/mset.hpp"

namespace multichain::msets {

// The standard multisimplex Hom(-, ([i_1], ..., [i_k])). A multisimplex of
// degree (a_1, ..., a_k) is a k-tuple of monotone maps [a_l] -> [i_l],
// stored as the concatenated vertex lists. Text form: "01|12".
class StandardMultisimplex final : public MSet {
 public:
  explicit StandardMultisimplex(MultiIndex targets);

  int k() const override { return targets_.k(); }
  std::string name() const override;
  const MultiIndex& targets() const { return targets_; }

  // The identity tuple (the top multisimplex).
  Multisimplex identity() const;

  bool is_degenerate(const Multisimplex& x) const override;
  bool contains(const Multisimplex& x) const override;
  std::string encode(const Multisimplex& x) const override;
  Multisimplex decode(std::string_view text) const override;

 protected:
  Multisimplex do_face(const Multisimplex& x, int dir, int i) const override;
  Multisimplex do_degeneracy(const Multisimplex& x, int dir, int i) const override;
  std::vector<Multisimplex> generate(const MultiIndex& degree) const override;

 private:
  std::size_t offset(const Multisimplex& x, int dir) const;

  MultiIndex targets_;
};

// Restriction of a k-fold set to the diagonal: (X^D)_n = X_{n,...,n}, with
// d_i = (d^1_i, ..., d^k_i) and s_i likewise. Payloads are shared with the
// underlying set; only the degree changes to (n).
class Diagonal final : public MSet {
 public:
  explicit Diagonal(MSetPtr base);

  int k() const override { return 1; }
  std::string name() const override;
  const MSet& base() const { return *base_; }
  const MSetPtr& base_ptr() const { return base_; }

  // Conversions between a diagonal simplex and the multisimplex of X it is.
  Multisimplex to_base(const Multisimplex& x) const;
  Multisimplex from_base(const Multisimplex& x) const;

  bool contains(const Multisimplex& x) const override;
  std::string encode(const Multisimplex& x) const override;
  Multisimplex decode(std::string_view text) const override;

 protected:
  Multisimplex do_face(const Multisimplex& x, int dir, int i) const override;
  Multisimplex do_degeneracy(const Multisimplex& x, int dir, int i) const override;
  Multisimplex do_front_face(const Multisimplex& x, const MultiIndex& to) const override;
  Multisimplex do_back_face(const Multisimplex& x, const MultiIndex& to) const override;
  std::vector<Multisimplex> generate(const MultiIndex& degree) const override;

 private:
  MSetPtr base_;
};

// External product X_1 ⊠ ... ⊠ X_k of simplicial (1-fold) sets: a k-fold
// set whose (a_1, ..., a_k) multisimplices are tuples (x_1, ..., x_k) with
// x_l of degree a_l. Its diagonal is the cartesian product. Payload layout:
// [len_1, payload_1..., len_2, payload_2..., ...]. Text form "(x_1;x_2;...)".
class ExternalProduct final : public MSet {
 public:
  explicit ExternalProduct(std::vector<MSetPtr> factors);

  int k() const override { return static_cast<int>(factors_.size()); }
  std::string name() const override;
  const std::vector<MSetPtr>& factors() const { return factors_; }

  Multisimplex pack(const std::vector<Multisimplex>& parts) const;
  std::vector<Multisimplex> unpack(const Multisimplex& x) const;

  bool is_degenerate(const Multisimplex& x) const override;
  bool contains(const Multisimplex& x) const override;
  std::string encode(const Multisimplex& x) const override;
  Multisimplex decode(std::string_view text) const override;

 protected:
  Multisimplex do_face(const Multisimplex& x, int dir, int i) const override;
  Multisimplex do_degeneracy(const Multisimplex& x, int dir, int i) const override;
  std::vector<Multisimplex> generate(const MultiIndex& degree) const override;

 private:
  std::vector<MSetPtr> factors_;
};

}  // namespace multichain::msets
