#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "multichain/ezaw/maps.hpp"

namespace multichain::ezaw {

struct PropertyFailure {
  std::string property;
  std::string input;
  std::string detail;
};

// Exact checks of the structural identities at one multisimplex, over the
// checker's ring (Z by default, so signs matter):
//   boundary_squared     d d x = 0 in C_* and N_*
//   ez_chain_map         d EZ x = EZ d x
//   aw_simp_chain_map    d AW_simp(EZ x) = AW_simp(d EZ x)      (on X^D)
//   aw_msimp_chain_map   d AW_msimp x = AW_msimp d x            (Koszul d)
//   aw_coassociative     (AW ⊗ 1) AW x = (1 ⊗ AW) AW x
//   square_commutes      AW_simp EZ x = (EZ ⊗ EZ) AW_msimp x
//   cup_associative      ((a ⌣ b) ⌣ c)(x) = (a ⌣ (b ⌣ c))(x)
//   leibniz              (a ⌣ b)(d x) = (da ⌣ b)(x) + (-1)^|a| (a ⌣ db)(x)
// The cochains a, b, c are pseudo-random functions drawn from the generator,
// with values in -2..2 on every multisimplex.
class PropertyChecker {
 public:
  explicit PropertyChecker(msets::MSetPtr set, Ring ring = Ring::integers());

  const MSet& set() const { return *set_; }
  const msets::Diagonal& diagonal() const { return *diagonal_; }

  // A random multisimplex of total degree <= max_total: the total degree,
  // then the multidegree, then the element are drawn uniformly. Degrees
  // where the set is empty are skipped.
  Multisimplex random_multisimplex(std::mt19937_64& rng, int max_total) const;

  std::optional<PropertyFailure> check(const Multisimplex& x, std::mt19937_64& rng);

  // Per-property count of checks run so far.
  const std::map<std::string, std::size_t>& counts() const { return counts_; }

  std::optional<PropertyFailure> boundary_squared(const Multisimplex& x);
  std::optional<PropertyFailure> ez_chain_map(const Multisimplex& x);
  std::optional<PropertyFailure> aw_simp_chain_map(const Multisimplex& x);
  std::optional<PropertyFailure> aw_msimp_chain_map(const Multisimplex& x);
  std::optional<PropertyFailure> aw_coassociative(const Multisimplex& x);
  std::optional<PropertyFailure> square_commutes(const Multisimplex& x);
  std::optional<PropertyFailure> cup_associative(const Multisimplex& x, std::mt19937_64& rng);
  std::optional<PropertyFailure> leibniz(const Multisimplex& x, std::mt19937_64& rng);

 private:
  CochainFunction random_cochain(int degree, std::uint64_t salt) const;
  PropertyFailure failure(const std::string& property, const Multisimplex& x, std::string detail) const;

  msets::MSetPtr set_;
  std::shared_ptr<msets::Diagonal> diagonal_;
  Ring ring_;
  std::map<std::string, std::size_t> counts_;
};

}  // namespace multichain::ezaw
