#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace multichain::surjection {

// c_0 + c_1 x + ... where c_i is the rank of the normalized complex in
// degree i.
struct CountingPolynomial {
  std::vector<mpz_class> coefficients;

  mpz_class value_at_one() const;
  // Largest common divisor of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  // "24*(1 + 6x + 10x^2 + 5x^3)": factor the given scalar out if it divides
  // every coefficient, otherwise print the plain polynomial.
  std::string factored(const mpz_class& factor) const;
  std::string to_string() const;

  friend bool operator==(const CountingPolynomial&, const CountingPolynomial&) = default;
};

// Generators of N_*(Sur_d(k)) by total degree. Finite for every d.
CountingPolynomial counting_polynomial_sur(int k, int d);

// Generators of N_*(BE_d(k)) by degree, stopping at degree_cap.
CountingPolynomial counting_polynomial_be(int k, int d, int degree_cap = 64);

mpz_class factorial(int n);

}  // namespace multichain::surjection
