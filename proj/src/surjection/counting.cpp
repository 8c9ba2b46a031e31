#include "multichain/surjection/counting.hpp"

#include "multichain/error.hpp"
#include "multichain/surjection/sets.hpp"
#include "walk.hpp"

namespace multichain::surjection {

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class CountingPolynomial::value_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coefficients) s += c;
  return s;
}

mpz_class CountingPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coefficients) g = gcd(g, c);
  return g;
}

namespace {

std::string plain(const std::vector<mpz_class>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += cs[i].get_str();
      continue;
    }
    if (cs[i] != 1) s += cs[i].get_str();
    s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string CountingPolynomial::to_string() const { return plain(coefficients); }

std::string CountingPolynomial::factored(const mpz_class& factor) const {
  if (factor == 1 || factor == 0) return to_string();
  std::vector<mpz_class> reduced;
  for (const auto& c : coefficients) {
    if (c % factor != 0) return to_string();
    reduced.push_back(c / factor);
  }
  const std::string inner = plain(reduced);
  if (inner == "1") return factor.get_str();
  return factor.get_str() + "*(" + inner + ")";
}

CountingPolynomial counting_polynomial_sur(int k, int d) {
  if (k < 1 || d < 1) throw IndexOutOfRange("counting polynomial needs k >= 1 and d >= 1");
  // Every step after the first adds a change to some pair (otherwise the new
  // entry would repeat its predecessor), so the walk is finite.
  CountingPolynomial poly;
  ComplexityWalk walk(k, d);
  std::vector<int> used(static_cast<std::size_t>(k) + 1, 0);
  int distinct = 0;
  auto recurse = [&](auto&& self) -> void {
    if (distinct == k) {
      const auto degree = static_cast<std::size_t>(walk.size() - k);
      if (poly.coefficients.size() <= degree) poly.coefficients.resize(degree + 1, 0);
      ++poly.coefficients[degree];
    }
    for (int v = 1; v <= k; ++v) {
      if (walk.size() > 0 && walk.sequence().back() == v) continue;
      if (!walk.push(v)) continue;
      if (used[static_cast<std::size_t>(v)]++ == 0) ++distinct;
      self(self);
      if (--used[static_cast<std::size_t>(v)] == 0) --distinct;
      walk.pop();
    }
  };
  recurse(recurse);
  return poly;
}

CountingPolynomial counting_polynomial_be(int k, int d, int degree_cap) {
  if (k < 1 || d < 1) throw IndexOutOfRange("counting polynomial needs k >= 1 and d >= 1");
  const auto perms = all_permutations(k);
  CountingPolynomial poly;
  OrderWalk walk(k, d);
  std::vector<std::size_t> chosen;
  auto recurse = [&](auto&& self) -> void {
    if (!chosen.empty()) {
      const auto degree = chosen.size() - 1;
      if (poly.coefficients.size() <= degree) poly.coefficients.resize(degree + 1, 0);
      ++poly.coefficients[degree];
      if (static_cast<int>(degree) >= degree_cap) return;
    }
    for (std::size_t c = 0; c < perms.size(); ++c) {
      if (!chosen.empty() && chosen.back() == c) continue;
      if (!walk.push(perms[c])) continue;
      chosen.push_back(c);
      self(self);
      chosen.pop_back();
      walk.pop();
    }
  };
  recurse(recurse);
  return poly;
}

}  // namespace multichain::surjection
