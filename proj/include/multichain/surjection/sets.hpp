#pragma once

#include <optional>
#include <vector>

#include "multichain/msets/mset.hpp"

namespace multichain::surjection {

using msets::MultiIndex;
using msets::Multisimplex;

// Max over pairs {a, b} of the number of adjacent unequal entries in the
// subsequence of u restricted to {a, b}. Values are 1..k; 0 when k < 2.
// Degeneracies never change it.
int complexity(const std::vector<std::int32_t>& u, int k);

// 1 + max over pairs {a, b} of the number of times the relative order of a
// and b flips along (sigma_0, ..., sigma_i). Permutations are given
// concatenated, each of length k.
int be_complexity(const std::vector<std::int32_t>& perms, int k);

// Sur(k), or the filtration stage Sur_d(k) when d is given. Direction l
// (zero based) counts the occurrences of the value l+1: a multisimplex of
// degree (i_1, ..., i_k) is a surjection {1..i_1+...+i_k+k} -> {1..k} hitting
// value l exactly i_l + 1 times. The payload is the sequence itself.
class SurjectionSet final : public msets::MSet {
 public:
  explicit SurjectionSet(int k, std::optional<int> d = std::nullopt);

  int k() const override { return k_; }
  std::optional<int> filtration() const { return d_; }
  std::string name() const override;

  bool is_degenerate(const Multisimplex& x) const override;
  bool contains(const Multisimplex& x) const override;
  std::string encode(const Multisimplex& x) const override;
  Multisimplex decode(std::string_view text) const override;

  // Builds the multisimplex for a sequence, computing its degree.
  Multisimplex make(std::vector<std::int32_t> sequence) const;

 protected:
  Multisimplex do_face(const Multisimplex& x, int dir, int i) const override;
  Multisimplex do_degeneracy(const Multisimplex& x, int dir, int i) const override;
  Multisimplex do_front_face(const Multisimplex& x, const MultiIndex& to) const override;
  Multisimplex do_back_face(const Multisimplex& x, const MultiIndex& to) const override;
  std::vector<Multisimplex> generate(const MultiIndex& degree) const override;
  std::vector<Multisimplex> generate_nondegenerate(const MultiIndex& degree) const override;

 private:
  std::vector<Multisimplex> arrangements(const MultiIndex& degree, bool nondegenerate) const;

  int k_;
  std::optional<int> d_;
};

// The Barratt-Eccles simplicial set W Sigma_k, or BE_d(k). An i-simplex is a
// tuple (sigma_0, ..., sigma_i) of permutations of {1..k}; d_j drops sigma_j
// and s_j repeats it. Payload: the permutations concatenated. Text form
// "123|231|312".
class BarrattEccles final : public msets::MSet {
 public:
  explicit BarrattEccles(int k, std::optional<int> d = std::nullopt);

  int k() const override { return 1; }
  int arity() const { return k_; }
  std::optional<int> filtration() const { return d_; }
  std::string name() const override;

  bool is_degenerate(const Multisimplex& x) const override;
  bool contains(const Multisimplex& x) const override;
  std::string encode(const Multisimplex& x) const override;
  Multisimplex decode(std::string_view text) const override;

  // The permutations of a simplex, in order.
  std::vector<std::vector<std::int32_t>> permutations(const Multisimplex& x) const;
  Multisimplex make(const std::vector<std::vector<std::int32_t>>& perms) const;

 protected:
  Multisimplex do_face(const Multisimplex& x, int dir, int i) const override;
  Multisimplex do_degeneracy(const Multisimplex& x, int dir, int i) const override;
  std::vector<Multisimplex> generate(const MultiIndex& degree) const override;
  std::vector<Multisimplex> generate_nondegenerate(const MultiIndex& degree) const override;

 private:
  std::vector<Multisimplex> tuples(int degree, bool nondegenerate) const;

  int k_;
  std::optional<int> d_;
};

// All permutations of {1..k} in lexicographic order.
std::vector<std::vector<std::int32_t>> all_permutations(int k);

}  // namespace multichain::surjection
