#include "multichain/ezaw/shuffle.hpp"

#include <algorithm>

#include "multichain/error.hpp"

namespace multichain::ezaw {

Shuffle::Shuffle(MultiIndex profile, std::vector<int> path) : profile_(std::move(profile)), path_(std::move(path)) {
  std::vector<int> counts(static_cast<std::size_t>(profile_.k()), 0);
  for (int d : path_) {
    if (d < 0 || d >= profile_.k()) throw IndexOutOfRange("shuffle step in direction " + std::to_string(d));
    ++counts[static_cast<std::size_t>(d)];
  }
  if (MultiIndex(counts) != profile_)
    throw IndexOutOfRange("path does not match the shuffle profile " + profile_.to_string());
}

Shuffle Shuffle::identity(const MultiIndex& profile) {
  std::vector<int> path;
  for (int l = 0; l < profile.k(); ++l) path.insert(path.end(), static_cast<std::size_t>(profile[l]), l);
  return Shuffle(profile, std::move(path));
}

std::vector<int> Shuffle::monotone_map(int dir) const {
  std::vector<int> pi{0};
  for (int d : path_) pi.push_back(pi.back() + (d == dir ? 1 : 0));
  return pi;
}

std::vector<int> Shuffle::permutation() const {
  std::vector<int> next(static_cast<std::size_t>(k()), 0);
  int offset = 0;
  for (int l = 0; l < k(); ++l) {
    next[static_cast<std::size_t>(l)] = offset;
    offset += profile_[l];
  }
  std::vector<int> out;
  for (int d : path_) out.push_back(++next[static_cast<std::size_t>(d)]);
  return out;
}

int Shuffle::sign() const {
  // Count pairs s < t with path[s] > path[t], one direction at a time.
  std::vector<long> seen(static_cast<std::size_t>(k()), 0);
  long inversions = 0;
  for (int d : path_) {
    for (int h = d + 1; h < k(); ++h) inversions += seen[static_cast<std::size_t>(h)];
    ++seen[static_cast<std::size_t>(d)];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Shuffle> enumerate_shuffles(const MultiIndex& profile) {
  for (int l = 0; l < profile.k(); ++l)
    if (profile[l] < 0) throw IndexOutOfRange("negative shuffle profile " + profile.to_string());
  std::vector<Shuffle> out;
  std::vector<int> remaining(profile.degrees());
  std::vector<int> path;
  const int n = profile.total();
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == n) {
      out.emplace_back(profile, path);
      return;
    }
    for (int l = 0; l < profile.k(); ++l) {
      if (remaining[static_cast<std::size_t>(l)] == 0) continue;
      --remaining[static_cast<std::size_t>(l)];
      path.push_back(l);
      self(self);
      path.pop_back();
      ++remaining[static_cast<std::size_t>(l)];
    }
  };
  recurse(recurse);
  return out;
}

Shuffle concat_shuffles(const Shuffle& p, const Shuffle& q) {
  if (p.k() != q.k()) throw IndexOutOfRange("concatenating shuffles of different arity");
  std::vector<int> path = p.path();
  path.insert(path.end(), q.path().begin(), q.path().end());
  std::vector<int> profile(static_cast<std::size_t>(p.k()));
  for (int l = 0; l < p.k(); ++l) profile[static_cast<std::size_t>(l)] = p.profile()[l] + q.profile()[l];
  return Shuffle(MultiIndex(profile), std::move(path));
}

std::optional<std::pair<Shuffle, Shuffle>> split_shuffle(const Shuffle& s, const MultiIndex& at) {
  if (at.k() != s.k()) throw IndexOutOfRange("split point " + at.to_string() + " has wrong arity");
  const int cut = at.total();
  if (cut < 0 || cut > s.length()) return std::nullopt;
  std::vector<int> counts(static_cast<std::size_t>(s.k()), 0);
  for (int t = 0; t < cut; ++t) ++counts[static_cast<std::size_t>(s.path()[static_cast<std::size_t>(t)])];
  if (MultiIndex(counts) != at) return std::nullopt;
  std::vector<int> front(s.path().begin(), s.path().begin() + cut);
  std::vector<int> back(s.path().begin() + cut, s.path().end());
  return std::make_pair(Shuffle(at, std::move(front)), Shuffle(s.profile() - at, std::move(back)));
}

}  // namespace multichain::ezaw
