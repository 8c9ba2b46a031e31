#include "multichain/surjection/sets.hpp"

#include <algorithm>
#include <stdexcept>

#include "multichain/error.hpp"
#include "walk.hpp"

namespace multichain::surjection {

int complexity(const std::vector<std::int32_t>& u, int k) {
  int best = 0;
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      int changes = 0;
      std::int32_t last = 0;
      for (auto v : u) {
        if (v != a && v != b) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
      }
      best = std::max(best, changes);
    }
  return best;
}

int be_complexity(const std::vector<std::int32_t>& perms, int k) {
  const std::size_t n = perms.size() / static_cast<std::size_t>(k);
  std::vector<std::vector<int>> pos(n, std::vector<int>(static_cast<std::size_t>(k) + 1));
  for (std::size_t j = 0; j < n; ++j)
    for (int p = 0; p < k; ++p) pos[j][static_cast<std::size_t>(perms[j * static_cast<std::size_t>(k) + p])] = p;
  int best = 0;
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      int changes = 0;
      for (std::size_t j = 1; j < n; ++j)
        if ((pos[j - 1][a] < pos[j - 1][b]) != (pos[j][a] < pos[j][b])) ++changes;
      best = std::max(best, changes);
    }
  return 1 + best;
}

std::vector<std::vector<std::int32_t>> all_permutations(int k) {
  std::vector<std::int32_t> p(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<std::int32_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

std::string encode_values(const std::vector<std::int32_t>& values, std::size_t from, std::size_t to, bool digits) {
  std::string s;
  for (std::size_t i = from; i < to; ++i) {
    if (!digits && i > from) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

std::vector<std::int32_t> decode_values(std::string_view text, bool digits) {
  std::vector<std::int32_t> out;
  if (text.empty()) throw ParseError("empty sequence");
  if (digits) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("bad digit '" + std::string(1, c) + "' in '" + std::string(text) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t p = 0;
  for (;;) {
    std::size_t comma = text.find(',', p);
    const auto piece = std::string(text.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p));
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw ParseError("bad entry '" + piece + "' in '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    p = comma + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Sur(k)

SurjectionSet::SurjectionSet(int k, std::optional<int> d) : k_(k), d_(d) {
  if (k < 1) throw IndexOutOfRange("Sur(k) needs k >= 1");
  if (d && *d < 1) throw IndexOutOfRange("filtration degree must be at least 1");
}

std::string SurjectionSet::name() const {
  return d_ ? "Sur_" + std::to_string(*d_) + "(" + std::to_string(k_) + ")" : "Sur(" + std::to_string(k_) + ")";
}

Multisimplex SurjectionSet::make(std::vector<std::int32_t> sequence) const {
  std::vector<int> counts(static_cast<std::size_t>(k_), -1);
  for (auto v : sequence) {
    if (v < 1 || v > k_) throw ParseError("value " + std::to_string(v) + " outside 1.." + std::to_string(k_));
    ++counts[static_cast<std::size_t>(v - 1)];
  }
  Multisimplex x{std::move(sequence), MultiIndex(counts)};
  if (!contains(x)) throw ParseError("not an element of " + name());
  return x;
}

bool SurjectionSet::is_degenerate(const Multisimplex& x) const {
  check_degree_arity(x);
  return std::adjacent_find(x.payload.begin(), x.payload.end()) != x.payload.end();
}

bool SurjectionSet::contains(const Multisimplex& x) const {
  if (x.degree.k() != k_) return false;
  std::vector<int> counts(static_cast<std::size_t>(k_), -1);
  for (auto v : x.payload) {
    if (v < 1 || v > k_) return false;
    ++counts[static_cast<std::size_t>(v - 1)];
  }
  if (MultiIndex(counts) != x.degree) return false;
  for (int c : counts)
    if (c < 0) return false;
  return !d_ || complexity(x.payload, k_) <= *d_;
}

std::string SurjectionSet::encode(const Multisimplex& x) const {
  return encode_values(x.payload, 0, x.payload.size(), k_ <= 9);
}

Multisimplex SurjectionSet::decode(std::string_view text) const { return make(decode_values(text, k_ <= 9)); }

namespace {

// Index of the (j+1)-th occurrence of value v.
std::size_t occurrence(const msets::Payload& p, std::int32_t v, int j) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == v && j-- == 0) return i;
  throw std::logic_error("occurrence out of range");
}

}  // namespace

Multisimplex SurjectionSet::do_face(const Multisimplex& x, int dir, int i) const {
  Multisimplex y = x;
  y.payload.erase(y.payload.begin() + static_cast<std::ptrdiff_t>(occurrence(x.payload, dir + 1, i)));
  y.degree[dir] -= 1;
  return y;
}

Multisimplex SurjectionSet::do_degeneracy(const Multisimplex& x, int dir, int i) const {
  Multisimplex y = x;
  const auto pos = occurrence(x.payload, dir + 1, i);
  y.payload.insert(y.payload.begin() + static_cast<std::ptrdiff_t>(pos), dir + 1);
  y.degree[dir] += 1;
  return y;
}

Multisimplex SurjectionSet::do_front_face(const Multisimplex& x, const MultiIndex& to) const {
  std::vector<int> seen(static_cast<std::size_t>(k_), 0);
  Multisimplex y{{}, to};
  for (auto v : x.payload)
    if (seen[static_cast<std::size_t>(v - 1)]++ <= to[v - 1]) y.payload.push_back(v);
  return y;
}

Multisimplex SurjectionSet::do_back_face(const Multisimplex& x, const MultiIndex& to) const {
  // Keep the last to[l]+1 occurrences: skip the first a_l - to[l].
  std::vector<int> skip(static_cast<std::size_t>(k_));
  for (int l = 0; l < k_; ++l) skip[static_cast<std::size_t>(l)] = x.degree[l] - to[l];
  Multisimplex y{{}, to};
  for (auto v : x.payload) {
    auto& s = skip[static_cast<std::size_t>(v - 1)];
    if (s > 0)
      --s;
    else
      y.payload.push_back(v);
  }
  return y;
}

std::vector<Multisimplex> SurjectionSet::arrangements(const MultiIndex& degree, bool nondegenerate) const {
  std::vector<int> remaining(static_cast<std::size_t>(k_));
  for (int l = 0; l < k_; ++l) remaining[static_cast<std::size_t>(l)] = degree[l] + 1;
  std::vector<Multisimplex> out;
  ComplexityWalk walk(k_, d_);
  const int length = degree.total() + k_;
  auto recurse = [&](auto&& self) -> void {
    if (walk.size() == length) {
      out.push_back({walk.sequence(), degree});
      return;
    }
    for (int v = 1; v <= k_; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (nondegenerate && walk.size() > 0 && walk.sequence().back() == v) continue;
      if (!walk.push(v)) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      self(self);
      ++remaining[static_cast<std::size_t>(v - 1)];
      walk.pop();
    }
  };
  recurse(recurse);
  return out;
}

std::vector<Multisimplex> SurjectionSet::generate(const MultiIndex& degree) const {
  return arrangements(degree, false);
}

std::vector<Multisimplex> SurjectionSet::generate_nondegenerate(const MultiIndex& degree) const {
  return arrangements(degree, true);
}

// ---------------------------------------------------------------- BE(k)

BarrattEccles::BarrattEccles(int k, std::optional<int> d) : k_(k), d_(d) {
  if (k < 1) throw IndexOutOfRange("BE(k) needs k >= 1");
  if (d && *d < 1) throw IndexOutOfRange("filtration degree must be at least 1");
}

std::string BarrattEccles::name() const {
  return d_ ? "BE_" + std::to_string(*d_) + "(" + std::to_string(k_) + ")" : "BE(" + std::to_string(k_) + ")";
}

std::vector<std::vector<std::int32_t>> BarrattEccles::permutations(const Multisimplex& x) const {
  std::vector<std::vector<std::int32_t>> out;
  const auto k = static_cast<std::size_t>(k_);
  for (std::size_t j = 0; j + k <= x.payload.size(); j += k)
    out.emplace_back(x.payload.begin() + static_cast<std::ptrdiff_t>(j),
                     x.payload.begin() + static_cast<std::ptrdiff_t>(j + k));
  return out;
}

Multisimplex BarrattEccles::make(const std::vector<std::vector<std::int32_t>>& perms) const {
  if (perms.empty()) throw ParseError("a Barratt-Eccles simplex needs at least one permutation");
  Multisimplex x{{}, MultiIndex{static_cast<int>(perms.size()) - 1}};
  for (const auto& p : perms) x.payload.insert(x.payload.end(), p.begin(), p.end());
  if (!contains(x)) throw ParseError("not an element of " + name());
  return x;
}

bool BarrattEccles::is_degenerate(const Multisimplex& x) const {
  check_degree_arity(x);
  const auto perms = permutations(x);
  return std::adjacent_find(perms.begin(), perms.end()) != perms.end();
}

bool BarrattEccles::contains(const Multisimplex& x) const {
  if (x.degree.k() != 1 || x.degree[0] < 0) return false;
  if (x.payload.size() != static_cast<std::size_t>(k_) * static_cast<std::size_t>(x.degree[0] + 1)) return false;
  for (const auto& p : permutations(x)) {
    std::vector<bool> seen(static_cast<std::size_t>(k_) + 1, false);
    for (auto v : p) {
      if (v < 1 || v > k_ || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return !d_ || be_complexity(x.payload, k_) <= *d_;
}

std::string BarrattEccles::encode(const Multisimplex& x) const {
  std::string s;
  const auto k = static_cast<std::size_t>(k_);
  for (std::size_t j = 0; j < x.payload.size(); j += k) {
    if (j) s += '|';
    s += encode_values(x.payload, j, j + k, k_ <= 9);
  }
  return s;
}

Multisimplex BarrattEccles::decode(std::string_view text) const {
  std::vector<std::vector<std::int32_t>> perms;
  std::size_t p = 0;
  for (;;) {
    const std::size_t bar = text.find('|', p);
    perms.push_back(decode_values(text.substr(p, bar == std::string_view::npos ? std::string_view::npos : bar - p),
                                  k_ <= 9));
    if (bar == std::string_view::npos) break;
    p = bar + 1;
  }
  return make(perms);
}

Multisimplex BarrattEccles::do_face(const Multisimplex& x, int /*dir*/, int i) const {
  Multisimplex y = x;
  const auto start = y.payload.begin() + static_cast<std::ptrdiff_t>(i) * k_;
  y.payload.erase(start, start + k_);
  y.degree[0] -= 1;
  return y;
}

Multisimplex BarrattEccles::do_degeneracy(const Multisimplex& x, int /*dir*/, int i) const {
  Multisimplex y = x;
  const auto start = static_cast<std::ptrdiff_t>(i) * k_;
  y.payload.insert(y.payload.begin() + start, x.payload.begin() + start, x.payload.begin() + start + k_);
  y.degree[0] += 1;
  return y;
}

std::vector<Multisimplex> BarrattEccles::tuples(int degree, bool nondegenerate) const {
  const auto perms = all_permutations(k_);
  std::vector<Multisimplex> out;
  OrderWalk walk(k_, d_);
  std::vector<std::size_t> chosen;
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(chosen.size()) == degree + 1) {
      Multisimplex x{{}, MultiIndex{degree}};
      for (auto c : chosen) x.payload.insert(x.payload.end(), perms[c].begin(), perms[c].end());
      out.push_back(std::move(x));
      return;
    }
    for (std::size_t c = 0; c < perms.size(); ++c) {
      if (nondegenerate && !chosen.empty() && chosen.back() == c) continue;
      if (!walk.push(perms[c])) continue;
      chosen.push_back(c);
      self(self);
      chosen.pop_back();
      walk.pop();
    }
  };
  recurse(recurse);
  return out;
}

std::vector<Multisimplex> BarrattEccles::generate(const MultiIndex& degree) const {
  return tuples(degree[0], false);
}

std::vector<Multisimplex> BarrattEccles::generate_nondegenerate(const MultiIndex& degree) const {
  return tuples(degree[0], true);
}

}  // namespace multichain::surjection
