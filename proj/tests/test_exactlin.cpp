#include <doctest.h>

#include "multichain/error.hpp"
#include "multichain/exactlin/homology.hpp"
#include "multichain/exactlin/linalg.hpp"
#include "oracles.hpp"

using namespace multichain;
using namespace multichain::exactlin;

namespace {

SparseMatrix matrix(const oracle::Matrix& m, std::size_t rows, std::size_t cols, Ring ring = Ring::integers()) {
  SparseMatrix out(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (m[r][c]) out.set(r, c, Coefficient(ring, m[r][c]));
  return out;
}

std::vector<long> as_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

oracle::Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  oracle::Matrix m(rows, std::vector<long>(cols, 0));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  return m;
}

// Integer vectors with entries in -1..1 killed by m, as columns of a matrix.
oracle::Matrix kernel_columns(std::mt19937& rng, const oracle::Matrix& m, std::size_t rows, std::size_t n,
                              std::size_t want) {
  std::vector<std::vector<long>> found;
  for (auto v : oracle::all_vectors(n, 3)) {
    for (auto& x : v) x -= 1;
    bool zero = true;
    for (std::size_t r = 0; r < rows && zero; ++r) {
      long s = 0;
      for (std::size_t c = 0; c < n; ++c) s += m[r][c] * v[c];
      zero = s == 0;
    }
    if (zero) found.push_back(v);
  }
  std::shuffle(found.begin(), found.end(), rng);
  oracle::Matrix out(n, std::vector<long>(want, 0));
  for (std::size_t j = 0; j < want && j < found.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) out[i][j] = found[j][i] * (j % 2 ? 2 : 1);
  return out;
}

}  // namespace

TEST_SUITE("exactlin") {
  TEST_CASE("coefficients stay canonical") {
    const Ring z5 = Ring::mod(5);
    CHECK(Coefficient(z5, -1).value() == 4);
    CHECK(Coefficient(z5, 12).value() == 2);
    CHECK((Coefficient(z5, 3) * Coefficient(z5, 2)).value() == 1);
    CHECK(Coefficient(z5, 3).inverse() == Coefficient(z5, 2));

    const Ring q = Ring::rationals();
    const Coefficient half = Coefficient::parse(q, "2/-4");
    CHECK(half.value().get_num() == -1);
    CHECK(half.value().get_den() == 2);
    CHECK((half + half) == Coefficient(q, -1));

    CHECK_THROWS_AS(Ring::mod(6), Error);
    CHECK_THROWS_AS(Coefficient::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(Coefficient::parse(Ring::integers(), "1/2"), Error);
    CHECK_THROWS_AS(Coefficient(Ring::integers(), 1) + Coefficient(q, 1), RingMismatch);
    CHECK(Ring::parse("Zp:7") == Ring::mod(7));
    CHECK(Ring::parse("Z3") == Ring::mod(3));
    CHECK_THROWS_AS(Ring::parse("R"), ParseError);
  }

  TEST_CASE("integer arithmetic does not overflow") {
    const Ring z = Ring::integers();
    Coefficient x(z, 1);
    for (int i = 0; i < 200; ++i) x *= Coefficient(z, 3);
    CHECK(x.to_string().size() == 96);  // 3^200 has 96 digits
  }

  TEST_CASE("Smith normal form examples") {
    CHECK(as_longs(smith_normal_form(matrix({{1, 0}, {0, 1}}, 2, 2))) == std::vector<long>{1, 1});
    CHECK(as_longs(smith_normal_form(matrix({{2}}, 1, 1))) == std::vector<long>{2});
    // Circle with two vertices and two edges: d(e0) = v1 - v0, d(e1) = v0 - v1.
    CHECK(as_longs(smith_normal_form(matrix({{-1, 1}, {1, -1}}, 2, 2))) == std::vector<long>{1});
    CHECK(smith_normal_form(SparseMatrix(Ring::integers(), 0, 0)).empty());
    CHECK(as_longs(smith_normal_form(matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3, 3))) ==
          std::vector<long>{2, 6, 12});
    CHECK_THROWS_AS(smith_normal_form(SparseMatrix(Ring::rationals(), 1, 1)), RingMismatch);
  }

  TEST_CASE("Smith normal form: divisor chain and rank") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      const auto m = random_matrix(rng, rows, cols, 4);
      const auto factors = smith_normal_form(matrix(m, rows, cols));
      for (std::size_t i = 0; i + 1 < factors.size(); ++i) CHECK(factors[i + 1] % factors[i] == 0);
      for (const auto& f : factors) CHECK(f > 0);
      CHECK(factors.size() == rank(matrix(m, rows, cols, Ring::rationals())));
      CHECK(factors.size() == rank(matrix(m, rows, cols)));
      // Mod a prime not dividing any factor, the rank is unchanged.
      for (long p : {2L, 3L, 5L}) {
        std::size_t units = 0;
        for (const auto& f : factors) units += f % p != 0;
        CHECK(rank(matrix(m, rows, cols, Ring::mod(static_cast<std::uint32_t>(p)))) == units);
      }
    }
  }

  TEST_CASE("homology of a pair: examples") {
    const Ring z = Ring::integers();
    SUBCASE("zero differentials") {
      const auto h = homology_of_pair(SparseMatrix(z, 4, 0), SparseMatrix(z, 0, 4), z);
      CHECK(h.betti == 4);
      CHECK(h.torsion.empty());
    }
    SUBCASE("circle in degree 1") {
      const auto h = homology_of_pair(SparseMatrix(z, 2, 0), matrix({{-1, 1}, {1, -1}}, 2, 2), z, 1);
      CHECK(h.degree == 1);
      CHECK(h.betti == 1);
      CHECK(h.torsion.empty());
    }
    SUBCASE("multiplication by 2") {
      const auto h = homology_of_pair(matrix({{2}}, 1, 1), SparseMatrix(z, 0, 1), z);
      CHECK(h.betti == 0);
      CHECK(as_longs(h.torsion) == std::vector<long>{2});
      CHECK(homology_of_pair(matrix({{2}}, 1, 1), SparseMatrix(z, 0, 1), Ring::mod(2)).betti == 1);
      CHECK(homology_of_pair(matrix({{2}}, 1, 1), SparseMatrix(z, 0, 1), Ring::rationals()).betti == 0);
    }
    SUBCASE("composition must vanish") {
      CHECK_THROWS_AS(homology_of_pair(matrix({{1}}, 1, 1), matrix({{1}}, 1, 1), z), CompositionNotZero);
    }
  }

  TEST_CASE("homology of a pair agrees with brute force over Z2 and Z3") {
    std::mt19937 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t n = 1 + rng() % 6, l = rng() % 4, m = rng() % 5;
      const auto d_out = random_matrix(rng, l, n, 1);
      const auto d_in = kernel_columns(rng, d_out, l, n, m);
      for (long p : {2L, 3L}) {
        const Ring ring = Ring::mod(static_cast<std::uint32_t>(p));
        const auto h = homology_of_pair(matrix(d_in, n, m), matrix(d_out, l, n), ring);
        CHECK(static_cast<int>(h.betti) == oracle::brute_betti(d_in, m, d_out, l, n, p));
        ++checked;
      }
      // Over Z the free rank matches Q.
      const auto hz = homology_of_pair(matrix(d_in, n, m), matrix(d_out, l, n), Ring::integers());
      CHECK(hz.betti == homology_of_pair(matrix(d_in, n, m), matrix(d_out, l, n), Ring::rationals()).betti);
    }
    CHECK(checked == 240);
  }

  TEST_CASE("echelon solves and kernels") {
    const Ring q = Ring::rationals();
    const auto m = matrix({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3, 3, q);
    const auto kernel = kernel_basis(m);
    REQUIRE(kernel.size() == 1);
    for (std::size_t r = 0; r < 3; ++r) {
      Coefficient s(q);
      for (const auto& [c, v] : kernel[0]) s += m.at(r, c) * v;
      CHECK(s.is_zero());
    }
    Echelon e(q);
    e.insert({{0, Coefficient(q, 1)}, {1, Coefficient(q, 1)}}, {{0, Coefficient(q, 1)}});
    e.insert({{1, Coefficient(q, 2)}}, {{1, Coefficient(q, 1)}});
    CHECK(e.rank() == 2);
    CHECK(e.in_span({{0, Coefficient(q, 3)}, {1, Coefficient(q, 5)}}));
    CHECK_FALSE(e.in_span({{2, Coefficient(q, 1)}}));
    CHECK_THROWS_AS(Echelon(Ring::integers()), NotAField);
  }
}
