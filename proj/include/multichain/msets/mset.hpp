#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "multichain/msets/multisimplex.hpp"

namespace multichain::msets {

// A k-fold simplicial set, given behaviourally: finite enumeration per
// multidegree plus face and degeneracy operators in each direction.
//
// Public operators validate their arguments (IndexOutOfRange) and forward to
// the do_* hooks, which may assume valid input. Instances are immutable; the
// enumeration caches are filled idempotently under a lock.
class MSet {
 public:
  virtual ~MSet() = default;

  virtual int k() const = 0;
  virtual std::string name() const = 0;

  // d^dir_i: requires a_dir >= 1 and 0 <= i <= a_dir.
  Multisimplex face(const Multisimplex& x, int dir, int i) const;
  // s^dir_i: requires 0 <= i <= a_dir.
  Multisimplex degeneracy(const Multisimplex& x, int dir, int i) const;

  // True iff x lies in the image of some degeneracy.
  virtual bool is_degenerate(const Multisimplex& x) const;

  // X(F_{i_1}, ..., F_{i_k})(x) and X(B_{i_1}, ..., B_{i_k})(x).
  Multisimplex front_face(const Multisimplex& x, const MultiIndex& to) const;
  Multisimplex back_face(const Multisimplex& x, const MultiIndex& to) const;

  // Every multisimplex of the given degree, sorted by payload. Throws
  // NotEnumerable for instances without a finite enumeration.
  const std::vector<Multisimplex>& enumerate(const MultiIndex& degree) const;
  // The non-degenerate part of enumerate(degree), same order.
  const std::vector<Multisimplex>& enumerate_nondegenerate(const MultiIndex& degree) const;

  // Whether x is a well-formed element of this set (including any filtration).
  virtual bool contains(const Multisimplex& x) const = 0;

  // Canonical text form of the payload, and its inverse.
  virtual std::string encode(const Multisimplex& x) const = 0;
  virtual Multisimplex decode(std::string_view text) const = 0;

 protected:
  virtual Multisimplex do_face(const Multisimplex& x, int dir, int i) const = 0;
  virtual Multisimplex do_degeneracy(const Multisimplex& x, int dir, int i) const = 0;

  // Defaults iterate last faces (front) or zeroth faces (back) per direction.
  virtual Multisimplex do_front_face(const Multisimplex& x, const MultiIndex& to) const;
  virtual Multisimplex do_back_face(const Multisimplex& x, const MultiIndex& to) const;

  virtual std::vector<Multisimplex> generate(const MultiIndex& degree) const = 0;
  // Defaults to filtering generate() through is_degenerate().
  virtual std::vector<Multisimplex> generate_nondegenerate(const MultiIndex& degree) const;

  void check_degree_arity(const Multisimplex& x) const;

 private:
  const std::vector<Multisimplex>& cached(const MultiIndex& degree, bool nondegenerate) const;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<MultiIndex, bool>, std::shared_ptr<const std::vector<Multisimplex>>> cache_;
};

using MSetPtr = std::shared_ptr<const MSet>;

// Generic degeneracy test for a k-fold set: x = s^l_i d^l_i x for some l, i.
bool is_degenerate_generic(const MSet& set, const Multisimplex& x);

}  // namespace multichain::msets
