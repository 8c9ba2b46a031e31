#include <doctest.h>

#include "helpers.hpp"
#include "multichain/error.hpp"
#include "multichain/ezaw/maps.hpp"
#include "multichain/io/json_io.hpp"
#include "multichain/io/text_io.hpp"

using namespace multichain;
using namespace testing_support;
using complexes::Chain;
using complexes::Cochain;
using exactlin::Coefficient;
using exactlin::Ring;
using io::json;

TEST_SUITE("io") {
  TEST_CASE("chain round trip") {
    const auto s3 = sur(3);
    std::mt19937_64 rng(71);
    for (const Ring& ring : {Ring::integers(), Ring::rationals(), Ring::mod(5)})
      for (int trial = 0; trial < 50; ++trial) {
        Chain c(ring);
        for (int i = 0; i < 4; ++i)
          c.add(random_element(*s3, rng, 2, 4), Coefficient(ring, std::uniform_int_distribution<long>(-9, 9)(rng)));
        if (ring == Ring::rationals()) c = c.scaled(Coefficient::parse(ring, "-7/3"));
        const json j = io::to_json(*s3, c);
        CHECK(io::chain_from_json(*s3, j) == c);
        CHECK(io::chain_from_json(*s3, json::parse(j.dump())) == c);
      }
    Chain big(Ring::integers());
    big.add(s3->decode("123"), Coefficient::parse(Ring::integers(), "123456789012345678901234567890"));
    const json j = io::to_json(*s3, big);
    CHECK(j["terms"][0]["coeff"] == "123456789012345678901234567890");
    CHECK(io::chain_from_json(*s3, j) == big);
  }

  TEST_CASE("cochain and tensor round trips") {
    const auto s2 = sur(2);
    Cochain a(Ring::mod(3), 1);
    a.set(s2->decode("121"), Coefficient(Ring::mod(3), 2));
    a.set(s2->decode("212"), Coefficient(Ring::mod(3), 1));
    const json ja = io::to_json(*s2, a);
    CHECK(ja["degree"] == 1);
    CHECK(io::cochain_from_json(*s2, ja) == a);
    const auto t = ezaw::aw_multisimplicial(*s2, Chain::of(Ring::integers(), s2->decode("12121")));
    CHECK(io::tensor_from_json(*s2, *s2, io::to_json(*s2, *s2, t)) == t);
  }

  TEST_CASE("malformed JSON is rejected") {
    const auto s2 = sur(2);
    CHECK_THROWS_AS(io::chain_from_json(*s2, json::parse(R"({"ring":"Z","terms":[{"coeff":"1","gen":"1231"}]})")),
                    ParseError);
    CHECK_THROWS_AS(io::chain_from_json(*s2, json::parse(R"({"ring":"Z","terms":[{"coeff":"x","gen":"121"}]})")),
                    ParseError);
    CHECK_THROWS_AS(io::chain_from_json(*s2, json::parse(R"({"terms":[]})")), ParseError);
    CHECK_THROWS_AS(io::chain_from_json(*s2, json::parse(R"({"ring":"Z","terms":[{"coeff":"1","gen":"121","degree":[0,1]}]})")),
                    ParseError);
    CHECK_THROWS_AS(io::chain_from_json(*s2, json::parse("[1,2]")), ParseError);
  }

  TEST_CASE("instance selectors") {
    const auto a = io::parse_instance("sur3:2");
    CHECK(a.family == io::InstanceSpec::Family::Surjection);
    CHECK(a.k == 3);
    CHECK(a.d == 2);
    CHECK(io::make_instance(a)->name() == sur(3, 2)->name());
    CHECK(io::make_instance(io::parse_instance("sur2"), 2)->name() == sur(2, 2)->name());
    CHECK(io::make_instance(io::parse_instance("sur2:0"), 2)->name() == sur(2)->name());
    CHECK(io::make_instance(io::parse_instance("be3"))->k() == 1);
    const auto s = io::parse_instance("std:2,1");
    CHECK(s.family == io::InstanceSpec::Family::Standard);
    CHECK(s.targets == MultiIndex{2, 1});
    for (const char* bad : {"", "sur", "surx", "be3:", "std:", "std:1,,2", "foo3", "sur-1"})
      CHECK_THROWS_AS(io::parse_instance(bad), ParseError);
  }

  TEST_CASE("term lists and multi-indices") {
    const auto s2 = sur(2);
    const Ring Q = Ring::rationals();
    const auto terms = io::parse_terms(*s2, Q, "3*121 - 1/2*212 + 12");
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].first == s2->decode("121"));
    CHECK(terms[0].second == Coefficient(Q, 3));
    CHECK(terms[1].second == Coefficient::parse(Q, "-1/2"));
    CHECK(terms[2].second == Coefficient(Q, 1));
    CHECK(io::parse_terms(*s2, Q, "-121").front().second == Coefficient(Q, -1));
    CHECK_THROWS_AS(io::parse_terms(*s2, Q, "3*"), ParseError);
    CHECK_THROWS_AS(io::parse_terms(*s2, Q, "111"), ParseError);
    CHECK_THROWS_AS(io::parse_terms(*s2, Ring::integers(), "1/2*121"), Error);
    CHECK(io::parse_multi_index("1,0,2") == MultiIndex{1, 0, 2});
    CHECK(io::parse_multi_index("1 0") == MultiIndex{1, 0});
    CHECK_THROWS_AS(io::parse_multi_index("1,-1"), ParseError);
    CHECK_THROWS_AS(io::parse_multi_index("a"), ParseError);
  }
}
