#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's algorithms; they work on plain vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;
using Matrix = std::vector<std::vector<long>>;  // rows x cols

inline Seq digits(const std::string& s) {
  Seq out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

inline std::string text(const Seq& s) {
  std::string out;
  for (int v : s) out += static_cast<char>('0' + v);
  return out;
}

inline int count(const Seq& s, int v) { return static_cast<int>(std::count(s.begin(), s.end(), v)); }

// Removes / doubles the (j+1)-th occurrence of v.
inline Seq remove_occurrence(Seq s, int v, int j) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == v && j-- == 0) {
      s.erase(s.begin() + static_cast<long>(i));
      return s;
    }
  return {};
}

inline Seq double_occurrence(Seq s, int v, int j) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == v && j-- == 0) {
      s.insert(s.begin() + static_cast<long>(i), v);
      return s;
    }
  return {};
}

// Boundary of a surjection by direct expansion of the signed face sum, with
// directions of degree zero contributing nothing.
inline std::map<Seq, long> sur_boundary(const Seq& u, int k) {
  std::map<Seq, long> out;
  int before = 0;
  for (int v = 1; v <= k; ++v) {
    const int a = count(u, v) - 1;
    if (a >= 1)
      for (int t = 0; t <= a; ++t) {
        const long sign = (t + before) % 2 == 0 ? 1 : -1;
        out[remove_occurrence(u, v, t)] += sign;
      }
    before += a;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Max over pairs of the number of value changes in the restricted subsequence.
inline int complexity(const Seq& u, int k) {
  int best = 0;
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      int last = 0, changes = 0;
      for (int v : u) {
        if (v != a && v != b) continue;
        if (last && v != last) ++changes;
        last = v;
      }
      best = std::max(best, changes);
    }
  return best;
}

// The (j+1)-th occurrences of each value, in the order they appear.
inline std::vector<Seq> occurrence_scan(const Seq& s, int k) {
  const int n = count(s, 1);
  std::vector<Seq> out(static_cast<std::size_t>(n));
  std::vector<int> seen(static_cast<std::size_t>(k + 1), 0);
  for (int v : s) out[static_cast<std::size_t>(seen[static_cast<std::size_t>(v)]++)].push_back(v);
  return out;
}

// Sign of a permutation of 0..n-1 via its cycle decomposition.
inline int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

inline long multinomial(const std::vector<int>& parts) {
  long result = 1;
  int n = 0;
  for (int a : parts)
    for (int i = 1; i <= a; ++i) result = result * ++n / i;
  return result;
}

// All vectors of Z_p^n, as digit lists.
inline std::vector<std::vector<long>> all_vectors(std::size_t n, long p) {
  std::vector<std::vector<long>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& v : out)
      for (long x = 0; x < p; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

inline long mod(long x, long p) { return ((x % p) + p) % p; }

inline std::vector<long> apply(const Matrix& m, const std::vector<long>& v, std::size_t rows, long p) {
  std::vector<long> out(rows, 0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] = mod(out[r] + m[r][c] * v[c], p);
  return out;
}

// dim over Z_p of ker(d_out) / im(d_in) by counting elements. d_in is
// n x m, d_out is l x n; both given over Z.
inline int brute_betti(const Matrix& d_in, std::size_t m, const Matrix& d_out, std::size_t l, std::size_t n, long p) {
  std::size_t kernel = 0;
  for (const auto& v : all_vectors(n, p)) {
    const auto image = apply(d_out, v, l, p);
    if (std::all_of(image.begin(), image.end(), [](long x) { return x == 0; })) ++kernel;
  }
  std::map<std::vector<long>, bool> image;
  for (const auto& v : all_vectors(m, p)) image[n ? apply(d_in, v, n, p) : std::vector<long>{}] = true;
  std::size_t size = image.size();
  int dim = 0;
  for (std::size_t q = kernel; q > size; q /= static_cast<std::size_t>(p)) ++dim;
  return dim;
}

}  // namespace oracle
