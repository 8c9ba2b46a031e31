#include "multichain/msets/mset.hpp"

#include <algorithm>

#include "multichain/error.hpp"

namespace multichain::msets {

void MSet::check_degree_arity(const Multisimplex& x) const {
  if (x.degree.k() != k())
    throw IndexOutOfRange(name() + ": multisimplex of arity " + std::to_string(x.degree.k()) + " in a " +
                          std::to_string(k()) + "-fold set");
}

Multisimplex MSet::face(const Multisimplex& x, int dir, int i) const {
  check_degree_arity(x);
  if (dir < 0 || dir >= k()) throw IndexOutOfRange(name() + ": face direction " + std::to_string(dir) + " out of range");
  if (x.degree[dir] < 1 || i < 0 || i > x.degree[dir])
    throw IndexOutOfRange(name() + ": face d_" + std::to_string(i) + " in direction " + std::to_string(dir) +
                          " of a degree " + x.degree.to_string() + " multisimplex");
  return do_face(x, dir, i);
}

Multisimplex MSet::degeneracy(const Multisimplex& x, int dir, int i) const {
  check_degree_arity(x);
  if (dir < 0 || dir >= k())
    throw IndexOutOfRange(name() + ": degeneracy direction " + std::to_string(dir) + " out of range");
  if (i < 0 || i > x.degree[dir])
    throw IndexOutOfRange(name() + ": degeneracy s_" + std::to_string(i) + " in direction " + std::to_string(dir) +
                          " of a degree " + x.degree.to_string() + " multisimplex");
  return do_degeneracy(x, dir, i);
}

bool is_degenerate_generic(const MSet& set, const Multisimplex& x) {
  for (int l = 0; l < set.k(); ++l)
    for (int i = 0; i < x.degree[l]; ++i)
      if (set.degeneracy(set.face(x, l, i), l, i) == x) return true;
  return false;
}

bool MSet::is_degenerate(const Multisimplex& x) const {
  check_degree_arity(x);
  return is_degenerate_generic(*this, x);
}

namespace {

void check_face_target(const MSet& set, const Multisimplex& x, const MultiIndex& to) {
  if (to.k() != set.k()) throw IndexOutOfRange(set.name() + ": face target " + to.to_string() + " has wrong arity");
  for (int l = 0; l < set.k(); ++l)
    if (to[l] < 0 || to[l] > x.degree[l])
      throw IndexOutOfRange(set.name() + ": face target " + to.to_string() + " not below " + x.degree.to_string());
}

}  // namespace

Multisimplex MSet::front_face(const Multisimplex& x, const MultiIndex& to) const {
  check_degree_arity(x);
  check_face_target(*this, x, to);
  return do_front_face(x, to);
}

Multisimplex MSet::back_face(const Multisimplex& x, const MultiIndex& to) const {
  check_degree_arity(x);
  check_face_target(*this, x, to);
  return do_back_face(x, to);
}

Multisimplex MSet::do_front_face(const Multisimplex& x, const MultiIndex& to) const {
  Multisimplex y = x;
  for (int l = 0; l < k(); ++l)
    while (y.degree[l] > to[l]) y = do_face(y, l, y.degree[l]);
  return y;
}

Multisimplex MSet::do_back_face(const Multisimplex& x, const MultiIndex& to) const {
  Multisimplex y = x;
  for (int l = 0; l < k(); ++l)
    while (y.degree[l] > to[l]) y = do_face(y, l, 0);
  return y;
}

std::vector<Multisimplex> MSet::generate_nondegenerate(const MultiIndex& degree) const {
  std::vector<Multisimplex> out;
  for (const auto& x : enumerate(degree))
    if (!is_degenerate(x)) out.push_back(x);
  return out;
}

const std::vector<Multisimplex>& MSet::cached(const MultiIndex& degree, bool nondegenerate) const {
  if (degree.k() != k()) throw IndexOutOfRange(name() + ": degree " + degree.to_string() + " has wrong arity");
  for (int l = 0; l < k(); ++l)
    if (degree[l] < 0) throw IndexOutOfRange(name() + ": negative degree " + degree.to_string());
  const auto key = std::make_pair(degree, nondegenerate);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  }
  auto list = std::make_shared<std::vector<Multisimplex>>(nondegenerate ? generate_nondegenerate(degree)
                                                                        : generate(degree));
  std::sort(list->begin(), list->end());
  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(key, std::move(list));
  return *it->second;
}

const std::vector<Multisimplex>& MSet::enumerate(const MultiIndex& degree) const { return cached(degree, false); }

const std::vector<Multisimplex>& MSet::enumerate_nondegenerate(const MultiIndex& degree) const {
  return cached(degree, true);
}

}  // namespace multichain::msets
