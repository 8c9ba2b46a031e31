#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "multichain/error.hpp"
#include "multichain/ezaw/maps.hpp"
#include "multichain/ezaw/properties.hpp"
#include "oracles.hpp"

using namespace multichain;
using namespace testing_support;
using complexes::Chain;
using complexes::ChainMode;
using complexes::Cochain;
using complexes::ComplexView;
using exactlin::Coefficient;
using exactlin::Ring;
using ezaw::Shuffle;
using ezaw::TensorChain;

namespace {

const Ring Z = Ring::integers();
const Ring Z2 = Ring::mod(2);

// Every profile with k <= 3 directions and total <= max_total.
std::vector<MultiIndex> profiles(int max_total) {
  std::vector<MultiIndex> out;
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= max_total; ++n)
      for (const auto& p : msets::multi_indices_of_total(k, n)) out.push_back(p);
  return out;
}

Chain chain(const msets::MSet& set, const Ring& ring, std::initializer_list<std::pair<const char*, long>> terms) {
  Chain c(ring);
  for (const auto& [g, v] : terms) c.add(set.decode(g), v);
  return c;
}

TensorChain tensor(const msets::MSet& left, const msets::MSet& right, const Ring& ring,
                   std::initializer_list<std::tuple<const char*, const char*, long>> terms) {
  TensorChain t(ring);
  for (const auto& [a, b, v] : terms) t.add({left.decode(a), right.decode(b)}, v);
  return t;
}

std::vector<int> zero_based(std::vector<int> perm) {
  for (auto& v : perm) --v;
  return perm;
}

}  // namespace

TEST_SUITE("ezaw") {
  TEST_CASE("shuffle enumeration") {
    CHECK(ezaw::enumerate_shuffles(MultiIndex{4}).size() == 1);
    CHECK(ezaw::enumerate_shuffles(MultiIndex{2, 1}).size() == 3);
    for (const auto& p : profiles(6)) {
      const auto all = ezaw::enumerate_shuffles(p);
      CHECK(static_cast<long>(all.size()) == oracle::multinomial(p.degrees()));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      for (const auto& s : all) {
        for (int l = 0; l < p.k(); ++l) {
          const auto pi = s.monotone_map(l);
          CHECK(pi.front() == 0);
          CHECK(pi.back() == p[l]);
        }
        CHECK(s.sign() == oracle::permutation_sign(zero_based(s.permutation())));
      }
    }
    CHECK(ezaw::enumerate_shuffles(MultiIndex{3, 0, 2}).front() == Shuffle::identity(MultiIndex{3, 0, 2}));
    CHECK(Shuffle::identity(MultiIndex{3, 0, 2}).sign() == 1);
    CHECK(Shuffle(MultiIndex{1, 1}, {1, 0}).sign() == -1);
    CHECK_THROWS_AS(Shuffle(MultiIndex{1, 1}, {0, 0}), IndexOutOfRange);
  }

  TEST_CASE("the (4,2)-shuffle 001001") {
    const Shuffle s(MultiIndex{4, 2}, {0, 0, 1, 0, 0, 1});
    CHECK(s.monotone_map(0) == std::vector<int>{0, 1, 2, 2, 3, 4, 4});
    CHECK(s.monotone_map(1) == std::vector<int>{0, 0, 0, 1, 1, 1, 2});
    CHECK(s.permutation() == std::vector<int>{1, 2, 5, 3, 4, 6});
    CHECK(s.sign() == 1);
    const auto all = ezaw::enumerate_shuffles(MultiIndex{4, 2});
    CHECK(std::find(all.begin(), all.end(), s) != all.end());
  }

  TEST_CASE("shuffle split and concatenation") {
    for (const auto& s : ezaw::enumerate_shuffles(MultiIndex{2, 1}))
      CHECK(ezaw::split_shuffle(s, MultiIndex{1, 0}).has_value() == (s.path().front() == 0));
    CHECK(ezaw::concat_shuffles(Shuffle::identity(MultiIndex{0, 0}), Shuffle::identity(MultiIndex{0, 0})).length() == 0);

    for (const auto& a : profiles(6)) {
      const auto all = ezaw::enumerate_shuffles(a);
      long valid_points = 0, block_products = 0;
      for (const auto& i : msets::multi_indices_below(a)) {
        const auto left = ezaw::enumerate_shuffles(i), right = ezaw::enumerate_shuffles(a - i);
        block_products += static_cast<long>(left.size() * right.size());
        // concat is injective on each block and split inverts it.
        std::set<Shuffle> images;
        for (const auto& p : left)
          for (const auto& q : right) {
            const auto s = ezaw::concat_shuffles(p, q);
            CHECK(s.profile() == a);
            images.insert(s);
            const auto back = ezaw::split_shuffle(s, i);
            REQUIRE(back.has_value());
            CHECK(back->first == p);
            CHECK(back->second == q);
          }
        CHECK(images.size() == left.size() * right.size());
        for (const auto& s : all) {
          // Prefix condition, counted directly.
          std::vector<int> seen(static_cast<std::size_t>(a.k()), 0);
          for (int t = 0; t < i.total(); ++t) ++seen[static_cast<std::size_t>(s.path()[static_cast<std::size_t>(t)])];
          const bool ok = seen == i.degrees();
          const auto split = ezaw::split_shuffle(s, i);
          CHECK(split.has_value() == ok);
          if (split) CHECK(ezaw::concat_shuffles(split->first, split->second) == s);
          valid_points += ok;
        }
      }
      CHECK(block_products == valid_points);
    }
  }

  TEST_CASE("EZ of 12121 and 12321") {
    const auto s2 = sur(2), s3 = sur(3);
    const msets::Diagonal d2(s2), d3(s3);
    CHECK(ezaw::ez_multisimplicial(d2, Chain::of(Z2, s2->decode("12121"))) ==
          chain(d2, Z2, {{"12221211", 1}, {"12211221", 1}, {"11212221", 1}}));
    CHECK(ezaw::ez_multisimplicial(d2, Chain::of(Z, s2->decode("12121"))) ==
          chain(d2, Z, {{"11212221", 1}, {"12211221", -1}, {"12221211", 1}}));
    // 11233221 and 12233211 have eight letters, too few for a
    // 2-simplex of Sur(3)^D (nine letters); the computed terms insert the
    // missing 3.
    CHECK_THROWS(d3.decode("11233221"));
    CHECK_THROWS(d3.decode("12233211"));
    CHECK(ezaw::ez_multisimplicial(d3, Chain::of(Z2, s3->decode("12321"))) ==
          chain(d3, Z2, {{"112333221", 1}, {"122333211", 1}}));
    CHECK(ezaw::ez_multisimplicial(d3, Chain::of(Z, s3->decode("12321"))) ==
          chain(d3, Z, {{"112333221", -1}, {"122333211", 1}}));
  }

  TEST_CASE("EZ of a one-direction degree is a single term") {
    const auto s3 = sur(3);
    const msets::Diagonal d3(s3);
    for (const auto& x : s3->enumerate(MultiIndex{2, 0, 0})) {
      const Chain e = ezaw::ez_multisimplicial(d3, Chain::of(Z, x));
      REQUIRE(e.size() == 1);
      CHECK(e.terms().begin()->second == Coefficient(Z, 1));
    }
  }

  TEST_CASE("EZ of identity simplices is the prism decomposition") {
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) {
        const auto dp = standard(MultiIndex{p}), dq = standard(MultiIndex{q});
        auto product = std::make_shared<msets::ExternalProduct>(std::vector<MSetPtr>{dp, dq});
        const msets::Diagonal diag(product);
        const auto idp = std::dynamic_pointer_cast<const msets::StandardMultisimplex>(dp)->identity();
        const auto idq = std::dynamic_pointer_cast<const msets::StandardMultisimplex>(dq)->identity();
        Chain expected(Z);
        std::vector<int> labels(static_cast<std::size_t>(p), 0);
        labels.insert(labels.end(), static_cast<std::size_t>(q), 1);
        do {
          std::string xs = "0", ys = "0";
          int x = 0, y = 0, inversions = 0, ones = 0;
          for (int lab : labels) {
            if (lab) {
              ++y;
              ++ones;
            } else {
              ++x;
              inversions += ones;
            }
            xs += std::to_string(x);
            ys += std::to_string(y);
          }
          expected.add(diag.decode("(" + xs + ";" + ys + ")"), inversions % 2 ? -1 : 1);
        } while (std::next_permutation(labels.begin(), labels.end()));
        CHECK(ezaw::ez_tensor(diag, {idp, idq}, Z) == expected);
      }
  }

  TEST_CASE("EZ on three factors is the iterated two-factor EZ") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<int> deg(0, 2);
      const int p = deg(rng), q = deg(rng), r = deg(rng);
      const auto dp = standard(MultiIndex{p}), dq = standard(MultiIndex{q}), dr = standard(MultiIndex{r});
      const auto x = random_element(*dp, rng, 2, 2), y = random_element(*dq, rng, 2, 2), z = random_element(*dr, rng, 2, 2);
      if (x.degree.total() + y.degree.total() + z.degree.total() > 5) continue;

      auto triple = std::make_shared<msets::ExternalProduct>(std::vector<MSetPtr>{dp, dq, dr});
      const msets::Diagonal d3(triple);
      const Chain direct = ezaw::ez_tensor(d3, {x, y, z}, Z);

      auto pair = std::make_shared<msets::ExternalProduct>(std::vector<MSetPtr>{dp, dq});
      auto d2 = std::make_shared<msets::Diagonal>(pair);
      auto outer = std::make_shared<msets::ExternalProduct>(std::vector<MSetPtr>{d2, dr});
      const msets::Diagonal dout(outer);
      Chain iterated(Z);
      const Chain xy = ezaw::ez_tensor(*d2, {x, y}, Z);
      for (const auto& [w, c] : xy.terms()) {
        const Chain wz = ezaw::ez_tensor(dout, {w, z}, Z);
        for (const auto& [t, v] : wz.terms()) {
          const auto parts = outer->unpack(dout.to_base(t));
          const auto inner = pair->unpack(d2->to_base(parts[0]));
          iterated.add(d3.from_base(triple->pack({inner[0], inner[1], parts[1]})), c * v);
        }
      }
      CHECK(direct == iterated);
    }
  }

  TEST_CASE("normalized EZ kills degenerate inputs") {
    const auto d1 = standard(MultiIndex{1}), d2 = standard(MultiIndex{2});
    auto product = std::make_shared<msets::ExternalProduct>(std::vector<MSetPtr>{d1, d2});
    const msets::Diagonal diag(product);
    const auto degenerate = d1->decode("001");
    for (const auto& y : d2->enumerate(MultiIndex{1})) {
      CHECK(ezaw::ez_tensor(diag, {degenerate, y}, Z, ChainMode::Normalized).is_zero());
      const Chain full = ezaw::ez_tensor(diag, {degenerate, y}, Z);
      for (const auto& [t, v] : full.terms()) CHECK(diag.is_degenerate(t));
    }
  }

  TEST_CASE("simplicial AW") {
    const auto s2 = sur(2);
    const msets::Diagonal d2(s2);
    for (const auto& x : d2.enumerate(MultiIndex{0})) CHECK(ezaw::aw_simplicial(d2, Chain::of(Z, x)) == tensor(d2, d2, Z, {{d2.encode(x).c_str(), d2.encode(x).c_str(), 1}}));
    const TensorChain a = ezaw::aw_simplicial(d2, Chain::of(Z2, d2.decode("12221211")));
    CHECK(a == tensor(d2, d2, Z2,
                      {{"12", "12221211", 1}, {"1221", "221211", 1}, {"122211", "2211", 1}, {"12221211", "21", 1}}));
    CHECK(d2.is_degenerate(d2.decode("2211")));
    CHECK(d2.is_degenerate(d2.decode("1122")));
    CHECK_FALSE(d2.is_degenerate(d2.decode("221211")));
  }

  TEST_CASE("multisimplicial AW of 12321 and 12121") {
    const auto s2 = sur(2), s3 = sur(3);
    CHECK(ezaw::aw_multisimplicial(*s3, Chain::of(Z2, s3->decode("12321"))) ==
          tensor(*s3, *s3, Z2, {{"123", "12321", 1}, {"1231", "2321", 1}, {"1232", "1321", 1}, {"12321", "321", 1}}));
    CHECK(ezaw::aw_multisimplicial(*s2, Chain::of(Z2, s2->decode("12121"))) ==
          tensor(*s2, *s2, Z2,
                 {{"12", "12121", 1},
                  {"122", "1121", 1},
                  {"121", "2121", 1},
                  {"1212", "121", 1},
                  {"1211", "221", 1},
                  {"12121", "21", 1}}));
    for (const auto& x : s3->enumerate(MultiIndex{0, 0, 0}))
      CHECK(ezaw::aw_multisimplicial(*s3, Chain::of(Z, x)) == tensor(*s3, *s3, Z, {{s3->encode(x).c_str(), s3->encode(x).c_str(), 1}}));
    // Sign: (-1)^(sum_{l<h} i_h (a_l - i_l)).
    CHECK(ezaw::aw_sign(MultiIndex{2, 1}, MultiIndex{1, 1}) == -1);
    CHECK(ezaw::aw_sign(MultiIndex{2, 1}, MultiIndex{0, 1}) == 1);
    CHECK(ezaw::aw_sign(MultiIndex{1, 1, 1}, MultiIndex{0, 1, 1}) == 1);
    CHECK(ezaw::aw_sign(MultiIndex{1, 1, 1}, MultiIndex{0, 0, 1}) == 1);
    CHECK(ezaw::aw_sign(MultiIndex{1, 1, 1}, MultiIndex{1, 0, 1}) == -1);
  }

  TEST_CASE("AW sign against a direct double sum") {
    for (const auto& a : profiles(5))
      for (const auto& i : msets::multi_indices_below(a)) {
        long e = 0;
        for (int l = 0; l < a.k(); ++l)
          for (int h = l + 1; h < a.k(); ++h) e += static_cast<long>(i[h]) * (a[l] - i[l]);
        CHECK(ezaw::aw_sign(a, i) == (e % 2 ? -1 : 1));
      }
  }

  TEST_CASE("the EZ/AW square") {
    const auto s2 = sur(2), s3 = sur(3);
    const msets::Diagonal d2(s2), d3(s3);
    const auto r1 = ezaw::verify_square(d2, s2->decode("12121"), Z);
    CHECK(r1.equal);
    CHECK(r1.summands == 12);
    CHECK(r1.with_degenerate_factor == 2);
    CHECK(r1.aw_of_ez.coefficient({d2.decode("122211"), d2.decode("2211")}) != Coefficient(Z));
    CHECK(r1.aw_of_ez.coefficient({d2.decode("1122"), d2.decode("112221")}) != Coefficient(Z));
    const auto r2 = ezaw::verify_square(d3, s3->decode("12321"), Z);
    CHECK(r2.equal);
    CHECK(r2.summands == 6);
    for (const auto& x : s3->enumerate(MultiIndex{0, 0, 0})) {
      const auto r = ezaw::verify_square(d3, x, Z);
      CHECK(r.equal);
      CHECK(r.aw_of_ez == tensor(d3, d3, Z, {{s3->encode(x).c_str(), s3->encode(x).c_str(), 1}}));
    }
  }

  TEST_CASE("cup products of cochains") {
    const auto s2 = sur(2);
    const ComplexView view(s2, Z, ChainMode::Full, 4);
    // In degree 0 the front and back faces are x itself.
    const Cochain c = ezaw::cup(view, Cochain::indicator(Z, s2->decode("12")), Cochain::indicator(Z, s2->decode("21")));
    CHECK(c.is_zero());
    CHECK_THROWS_AS(ezaw::cup(view, Cochain(Ring::rationals(), 0), Cochain(Z, 0)), RingMismatch);

    std::mt19937_64 rng(47);
    auto random_cochain = [&](int n, bool normalized) {
      Cochain a(Z, n);
      for (const auto& g : view.basis(n))
        if (!normalized || !s2->is_degenerate(g)) a.add(g, Coefficient(Z, std::uniform_int_distribution<long>(-2, 2)(rng)));
      return a;
    };
    for (int trial = 0; trial < 30; ++trial)
      for (int p = 0; p <= 1; ++p)
        for (int q = 0; p + q <= 2; ++q) {
          const Cochain a = random_cochain(p, false), b = random_cochain(q, false);
          // Leibniz with delta = dual of the boundary.
          const Cochain lhs = view.coboundary(ezaw::cup(view, a, b));
          Cochain rhs = ezaw::cup(view, view.coboundary(a), b);
          const Cochain second = ezaw::cup(view, a, view.coboundary(b));
          rhs += p % 2 ? second.scaled(Coefficient(Z, -1)) : second;
          CHECK(lhs == rhs);
          for (int r = 0; p + q + r <= 2; ++r) {
            const Cochain c3 = random_cochain(r, false);
            CHECK(ezaw::cup(view, ezaw::cup(view, a, b), c3) == ezaw::cup(view, a, ezaw::cup(view, b, c3)));
          }
          const Cochain na = random_cochain(p, true), nb = random_cochain(q, true);
          const Cochain nab = ezaw::cup(view, na, nb);
          for (const auto& [x, v] : nab.values()) CHECK_FALSE(s2->is_degenerate(x));
        }
  }

  TEST_CASE("EZ* is multiplicative and commutes with delta") {
    const auto s2 = sur(2);
    auto diag = std::make_shared<msets::Diagonal>(s2);
    const ComplexView view(s2, Z, ChainMode::Full, 4);
    const ComplexView dview(diag, Z, ChainMode::Full, 4);
    CHECK(ezaw::ez_dual(view, *diag, Cochain(Z, 2)).is_zero());
    std::size_t pairs = 0;
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; p + q <= 3; ++q)
        for (const auto& g : dview.basis(p))
          for (const auto& h : dview.basis(q)) {
            const Cochain phi = Cochain::indicator(Z, g), psi = Cochain::indicator(Z, h);
            CHECK(ezaw::ez_dual(view, *diag, ezaw::cup(dview, phi, psi)) ==
                  ezaw::cup(view, ezaw::ez_dual(view, *diag, phi), ezaw::ez_dual(view, *diag, psi)));
            ++pairs;
          }
    CHECK(pairs > 600);
    for (int p = 0; p <= 2; ++p)
      for (const auto& g : dview.basis(p)) {
        const Cochain phi = Cochain::indicator(Z, g);
        CHECK(ezaw::ez_dual(view, *diag, dview.coboundary(phi)) == view.coboundary(ezaw::ez_dual(view, *diag, phi)));
      }
    // Equal homology on both sides of EZ.
    const auto h = ComplexView(sur(2, 2), Z, ChainMode::Normalized, 3).homology(0, 2);
    const auto hd = ComplexView(std::make_shared<msets::Diagonal>(sur(2, 2)), Z, ChainMode::Normalized, 3).homology(0, 2);
    for (std::size_t n = 0; n < 3; ++n) CHECK(h[n].betti == hd[n].betti);
  }

  TEST_CASE("property checker on random inputs") {
    for (const auto& set : std::vector<MSetPtr>{sur(2), sur(3), sur(3, 2), standard(MultiIndex{2, 1}),
                                                 standard(MultiIndex{1, 1, 1}),
                                                 std::make_shared<surjection::BarrattEccles>(3)}) {
      CAPTURE(set->name());
      ezaw::PropertyChecker checker(set);
      std::mt19937_64 rng(53);
      for (int i = 0; i < 150; ++i) {
        const auto x = checker.random_multisimplex(rng, 4);
        CHECK(x.degree.total() <= 4);
        const auto failure = checker.check(x, rng);
        CHECK_MESSAGE(!failure, (failure ? failure->property + " " + failure->input + " " + failure->detail : ""));
      }
      CHECK(checker.counts().at("square_commutes") == 150);
    }
  }
}
