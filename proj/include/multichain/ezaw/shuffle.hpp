#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "multichain/msets/multisimplex.hpp"

namespace multichain::ezaw {

using msets::MultiIndex;

// An (a_1, ..., a_k)-shuffle as a lattice path: step t moves in direction
// path[t] (zero based). The monotone map pi_l sends j to the number of
// direction-l steps among the first j.
class Shuffle {
 public:
  Shuffle() = default;
  // Throws IndexOutOfRange unless the path has a_l steps in direction l.
  Shuffle(MultiIndex profile, std::vector<int> path);

  static Shuffle identity(const MultiIndex& profile);

  const MultiIndex& profile() const { return profile_; }
  const std::vector<int>& path() const { return path_; }
  int k() const { return profile_.k(); }
  int length() const { return static_cast<int>(path_.size()); }

  // pi_l as the list pi_l(0), ..., pi_l(n).
  std::vector<int> monotone_map(int dir) const;

  // One-line form of the permutation, 1-based: the step t+1 that is the
  // m-th step in direction l goes to a_1 + ... + a_{l-1} + m.
  std::vector<int> permutation() const;

  // Parity of the number of pairs of steps s < t with path[s] > path[t].
  int sign() const;

  friend auto operator<=>(const Shuffle&, const Shuffle&) = default;

 private:
  MultiIndex profile_;
  std::vector<int> path_;
};

// Every shuffle of the profile, lexicographic on the path. There are
// (a_1 + ... + a_k)! / (a_1! ... a_k!) of them.
std::vector<Shuffle> enumerate_shuffles(const MultiIndex& profile);

// Path concatenation; profiles add.
Shuffle concat_shuffles(const Shuffle& p, const Shuffle& q);

// Inverse of concat_shuffles at the split point i: defined iff the first
// i_1 + ... + i_k steps contain exactly i_l steps in direction l.
std::optional<std::pair<Shuffle, Shuffle>> split_shuffle(const Shuffle& s, const MultiIndex& at);

}  // namespace multichain::ezaw
