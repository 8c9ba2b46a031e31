#include <doctest.h>

#include "helpers.hpp"
#include "multichain/error.hpp"
#include "multichain/ezaw/maps.hpp"
#include "multichain/surjection/counting.hpp"
#include "multichain/surjection/tc.hpp"
#include "oracles.hpp"

using namespace multichain;
using namespace testing_support;
using complexes::Chain;
using complexes::ChainMode;
using exactlin::Ring;
using surjection::BarrattEccles;
using surjection::CountingPolynomial;

namespace {

const Ring Z = Ring::integers();

std::vector<std::int32_t> seq(const std::string& s) {
  const auto d = oracle::digits(s);
  return {d.begin(), d.end()};
}

CountingPolynomial poly(long factor, std::initializer_list<long> cs) {
  CountingPolynomial p;
  for (long c : cs) p.coefficients.emplace_back(factor * c);
  return p;
}

// Nondegenerate surjections of complexity <= d by degree, by depth-first
// extension. Complexity only grows along prefixes, so the search is finite.
std::vector<long> brute_sur_counts(int k, int d) {
  std::vector<long> counts;
  oracle::Seq s;
  auto rec = [&](auto&& self) -> void {
    bool onto = true;
    for (int v = 1; v <= k; ++v) onto = onto && oracle::count(s, v) > 0;
    if (onto) {
      const auto n = s.size() - static_cast<std::size_t>(k);
      if (counts.size() <= n) counts.resize(n + 1, 0);
      ++counts[n];
    }
    for (int v = 1; v <= k; ++v) {
      if (!s.empty() && s.back() == v) continue;
      s.push_back(v);
      if (oracle::complexity(s, k) <= d) self(self);
      s.pop_back();
    }
  };
  rec(rec);
  return counts;
}

// Flips of the relative order of a and b along a tuple of permutations.
int max_flips(const std::vector<std::vector<int>>& tuple, int k) {
  int best = 0;
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      int flips = 0;
      std::optional<bool> last;
      for (const auto& p : tuple) {
        const bool before = std::find(p.begin(), p.end(), a) < std::find(p.begin(), p.end(), b);
        if (last && *last != before) ++flips;
        last = before;
      }
      best = std::max(best, flips);
    }
  return best;
}

std::vector<long> brute_be_counts(int k, int d) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<long> counts;
  std::vector<std::vector<int>> tuple;
  auto rec = [&](auto&& self) -> void {
    const auto n = tuple.size() - 1;
    if (counts.size() <= n) counts.resize(n + 1, 0);
    ++counts[n];
    for (const auto& q : perms) {
      if (tuple.back() == q) continue;
      tuple.push_back(q);
      // The stage d allows d-1 flips per pair.
      if (max_flips(tuple, k) <= d - 1) self(self);
      tuple.pop_back();
    }
  };
  for (const auto& q : perms) {
    tuple = {q};
    rec(rec);
  }
  return counts;
}

std::vector<long> as_longs(const CountingPolynomial& p) {
  std::vector<long> out;
  for (const auto& c : p.coefficients) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_SUITE("surjection") {
  TEST_CASE("complexity") {
    CHECK(surjection::complexity(seq("12"), 2) == 1);
    CHECK(surjection::complexity(seq("121"), 2) == 2);
    CHECK(surjection::complexity(seq("12121"), 2) == 4);
    CHECK(surjection::complexity(seq("12321"), 3) == 2);
    CHECK(surjection::complexity(seq("1"), 1) == 0);
    std::mt19937_64 rng(59);
    for (int k = 2; k <= 4; ++k) {
      const auto s = sur(k);
      for (int trial = 0; trial < 300; ++trial) {
        const auto x = random_element(*s, rng, 2, 6);
        const std::vector<std::int32_t> u(x.payload.begin(), x.payload.end());
        CHECK(surjection::complexity(u, k) == oracle::complexity(oracle::Seq(u.begin(), u.end()), k));
        const int l = std::uniform_int_distribution<int>(0, k - 1)(rng);
        const auto y = s->degeneracy(x, l, std::uniform_int_distribution<int>(0, x.degree[l])(rng));
        CHECK(surjection::complexity({y.payload.begin(), y.payload.end()}, k) == surjection::complexity(u, k));
      }
    }
  }

  TEST_CASE("filtration stages as sets") {
    const auto s2 = sur(2, 2);
    CHECK(s2->contains(s2->decode("121")));
    CHECK_THROWS(s2->decode("1212"));
    CHECK(sur(2, 3)->contains(sur(2, 3)->decode("1212")));
    // Stage 2 of Sur(2) stops at degree 1.
    CHECK(s2->enumerate_nondegenerate(MultiIndex{1, 1}).empty());
    CHECK(s2->enumerate_nondegenerate(MultiIndex{1, 0}).size() == 1);
  }

  TEST_CASE("reference counting polynomials") {
    CHECK(surjection::counting_polynomial_sur(4, 2) == poly(24, {1, 6, 10, 5}));
    CHECK(surjection::counting_polynomial_sur(3, 3) == poly(6, {1, 3, 7, 9, 6, 1}));
    CHECK(surjection::counting_polynomial_be(4, 2) == poly(24, {1, 23, 104, 196, 184, 86, 16}));
    CHECK(surjection::counting_polynomial_be(3, 3) == poly(6, {1, 5, 25, 60, 70, 38, 8}));
    CHECK(surjection::counting_polynomial_sur(4, 2).factored(24) == "24*(1 + 6x + 10x^2 + 5x^3)");
    CHECK(surjection::counting_polynomial_sur(1, 1) == poly(1, {1}));
    CHECK(surjection::counting_polynomial_be(1, 1) == poly(1, {1}));
  }

  TEST_CASE("counting polynomials against exhaustive search") {
    for (int k = 2; k <= 4; ++k)
      for (int d = 1; d <= (k <= 3 ? 3 : 2); ++d) {
        CAPTURE(k);
        CAPTURE(d);
        const auto p = surjection::counting_polynomial_sur(k, d);
        CHECK(as_longs(p) == brute_sur_counts(k, d));
        CHECK(p.content() % surjection::factorial(k) == 0);
        long enumerated = 0;
        const auto s = sur(k, d);
        for (int n = 0; n < static_cast<int>(p.coefficients.size()); ++n)
          for (const auto& a : msets::multi_indices_of_total(k, n))
            enumerated += static_cast<long>(s->enumerate_nondegenerate(a).size());
        CHECK(p.value_at_one() == enumerated);
      }
    for (int k = 2; k <= 3; ++k)
      for (int d = 1; d <= 3; ++d) {
        const auto p = surjection::counting_polynomial_be(k, d);
        CHECK(as_longs(p) == brute_be_counts(k, d));
        CHECK(p.content() % surjection::factorial(k) == 0);
      }
  }

  TEST_CASE("Barratt-Eccles simplices") {
    const BarrattEccles be(3);
    const auto x = be.decode("123|231|312");
    CHECK(x.degree == MultiIndex{2});
    CHECK(be.encode(be.face(x, 0, 1)) == "123|312");
    CHECK(be.encode(be.degeneracy(x, 0, 2)) == "123|231|312|312");
    CHECK(be.is_degenerate(be.decode("123|123")));
    CHECK_FALSE(be.is_degenerate(x));
    CHECK(surjection::be_complexity(seq("123231312"), 3) == 3);
    CHECK(surjection::be_complexity(seq("123"), 3) == 1);
    CHECK_THROWS(be.decode("123|12"));
    CHECK_THROWS(BarrattEccles(3, 1).decode("12|21"));
    CHECK(be.enumerate(MultiIndex{1}).size() == 36);
    CHECK(be.enumerate_nondegenerate(MultiIndex{1}).size() == 30);
    CHECK(surjection::all_permutations(3).size() == 6);
  }

  TEST_CASE("tc on examples") {
    const BarrattEccles be(3), be2(2);
    CHECK(surjection::format_permutations(be, surjection::tc(be, seq("122333112"))) == "(123, 231, 312)");
    CHECK(surjection::format_permutations(be2, surjection::tc(be2, seq("1212"))) == "(12, 12)");
    CHECK(surjection::format_permutations(be2, surjection::tc(be2, seq("12"))) == "(12)");
    CHECK_THROWS_AS(surjection::tc(be, seq("12321")), MalformedDiagonal);
  }

  TEST_CASE("tc is simplicial") {
    std::mt19937_64 rng(61);
    for (int k = 2; k <= 3; ++k) {
      const auto s = sur(k);
      const msets::Diagonal diag(s);
      const BarrattEccles be(k);
      for (int trial = 0; trial < 1000 / 2; ++trial) {
        const auto x = random_element(diag, rng, 3, 3);
        const auto base = diag.to_base(x);
        const std::vector<std::int32_t> u(base.payload.begin(), base.payload.end());
        const auto t = surjection::tc(be, u);
        std::vector<oracle::Seq> expected = oracle::occurrence_scan(oracle::Seq(u.begin(), u.end()), k);
        CHECK(be.permutations(t).size() == expected.size());
        for (std::size_t j = 0; j < expected.size(); ++j)
          CHECK(std::equal(expected[j].begin(), expected[j].end(), be.permutations(t)[j].begin()));
        const int n = x.degree[0];
        const int j = std::uniform_int_distribution<int>(0, n)(rng);
        if (n > 0) {
          const auto f = diag.to_base(diag.face(x, 0, j));
          CHECK(surjection::tc(be, {f.payload.begin(), f.payload.end()}) == be.face(t, 0, j));
        }
        const auto g = diag.to_base(diag.degeneracy(x, 0, j));
        CHECK(surjection::tc(be, {g.payload.begin(), g.payload.end()}) == be.degeneracy(t, 0, j));
      }
    }
  }

  TEST_CASE("TC is a chain map into normalized chains") {
    for (int k = 2; k <= 3; ++k) {
      const auto s = sur(k);
      const msets::Diagonal diag(s);
      const BarrattEccles be(k);
      for (int n = 1; n <= 3; ++n)
        for (const auto& a : msets::multi_indices_of_total(k, n))
          for (const auto& x : s->enumerate_nondegenerate(a)) {
            const Chain c = Chain::of(Z, x);
            const Chain lhs = complexes::boundary(be, surjection::TC(diag, be, c), ChainMode::Normalized);
            const Chain rhs = surjection::TC(diag, be, complexes::boundary(*s, c, ChainMode::Normalized));
            CHECK(lhs == rhs);
          }
    }
    const auto s3 = sur(3);
    const msets::Diagonal d3(s3);
    const BarrattEccles be(3);
    const Ring Z2 = Ring::mod(2);
    Chain expected(Z2);
    expected.add(be.decode("123|132|321"), 1);
    expected.add(be.decode("123|231|321"), 1);
    CHECK(surjection::TC(d3, be, Chain::of(Z2, s3->decode("12321"))) == expected);
    for (const auto& x : s3->enumerate(MultiIndex{0, 0, 0})) {
      const Chain t = surjection::TC(d3, be, Chain::of(Z, x));
      REQUIRE(t.size() == 1);
      CHECK(be.permutations(t.terms().begin()->first)[0] == std::vector<std::int32_t>(x.payload.begin(), x.payload.end()));
    }
  }

  TEST_CASE("tc and the complexity filtration") {
    for (int d = 1; d <= 3; ++d) {
      const auto r = surjection::tc_respects_filtration(3, d, 2);
      CHECK(r.forward_checked > 0);
      CHECK(r.forward_violations == 0);
    }
    const auto r = surjection::tc_respects_filtration(3, 2, 2);
    CHECK(r.reverse_violations > 0);
    REQUIRE(r.reverse_counterexample.has_value());
    // Degree 1 already breaks the reverse direction: (12, 12) is in every stage.
    const auto r2 = surjection::tc_respects_filtration(2, 2, 1);
    CHECK(r2.reverse_violations > 0);
    CHECK(surjection::complexity(seq("1212"), 2) == 3);
  }
}
