// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 125). `--only N` runs a single criterion.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "multichain/cohomtools/products.hpp"
#include "multichain/complexes/normalization.hpp"
#include "multichain/error.hpp"
#include "multichain/ezaw/maps.hpp"
#include "multichain/ezaw/properties.hpp"
#include "multichain/surjection/counting.hpp"
#include "multichain/surjection/tc.hpp"

using namespace multichain;
using complexes::Chain;
using complexes::ChainMode;
using complexes::ComplexView;
using exactlin::Coefficient;
using exactlin::Ring;
using msets::MSetPtr;
using msets::MultiIndex;

namespace {

// Tolerances: every comparison below is exact. The only numeric limits are
// the sample counts and the runtime budgets, pinned here.
constexpr int kPropertySamples = 1000;
constexpr int kPropertyMaxTotal = 4;
constexpr int kShuffleMaxTotal = 6;
constexpr int kShuffleMaxArity = 6;
constexpr int kNormalizationChains = 500;
constexpr double kBudgetSeconds[10] = {0, 30, 1, 1, 120, 60, 60, 300, 120, 300};

struct Outcome {
  bool pass = true;
  std::string detail;
};

MSetPtr sur(int k, std::optional<int> d = std::nullopt) { return std::make_shared<surjection::SurjectionSet>(k, d); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

Outcome counting_polynomials() {
  using surjection::CountingPolynomial;
  auto poly = [](long f, std::initializer_list<long> cs) {
    CountingPolynomial p;
    for (long c : cs) p.coefficients.emplace_back(f * c);
    return p;
  };
  struct Row {
    const char* name;
    CountingPolynomial got, want;
  };
  const Row rows[] = {
      {"Pchi_2^4", surjection::counting_polynomial_sur(4, 2), poly(24, {1, 6, 10, 5})},
      {"PB_2^4", surjection::counting_polynomial_be(4, 2), poly(24, {1, 23, 104, 196, 184, 86, 16})},
      {"Pchi_3^3", surjection::counting_polynomial_sur(3, 3), poly(6, {1, 3, 7, 9, 6, 1})},
      {"PB_3^3", surjection::counting_polynomial_be(3, 3), poly(6, {1, 5, 25, 60, 70, 38, 8})},
  };
  Outcome o;
  std::vector<std::string> parts;
  for (const auto& r : rows) {
    const bool ok = r.got == r.want;
    o.pass = o.pass && ok;
    parts.push_back(std::string(r.name) + (ok ? " ok" : " = " + r.got.to_string()));
  }
  o.detail = join(parts);
  return o;
}

Outcome golden_examples() {
  const Ring Z2 = Ring::mod(2);
  const auto s2 = sur(2), s3 = sur(3);
  const msets::Diagonal d2(s2), d3(s3);
  Outcome o;
  std::vector<std::string> parts;
  auto note = [&](const std::string& what, bool ok, const std::string& extra = "") {
    o.pass = o.pass && ok;
    parts.push_back(what + (ok ? " ok" : " MISMATCH" + extra));
  };

  // EZ(12321) against the reference value.
  {
    const Chain got = ezaw::ez_multisimplicial(d3, Chain::of(Z2, s3->decode("12321")));
    std::string why;
    bool ok = false;
    try {
      Chain want(Z2);
      want.add(d3.decode("11233221"), 1);
      want.add(d3.decode("12233211"), 1);
      ok = got == want;
      if (!ok) why = " (computed " + complexes::format_chain(d3, got) + ")";
    } catch (const Error& e) {
      why = " (reference terms are not 2-simplices of Sur(3)^D: " + std::string(e.what()) + "; computed " +
            complexes::format_chain(d3, got) + ")";
    }
    note("EZ(12321)", ok, why);
  }
  {
    Chain want(Z2);
    for (const char* g : {"12221211", "12211221", "11212221"}) want.add(d2.decode(g), 1);
    const Chain got = ezaw::ez_multisimplicial(d2, Chain::of(Z2, s2->decode("12121")));
    note("EZ(12121)", got == want, " (computed " + complexes::format_chain(d2, got) + ")");
  }
  auto tensor = [&](const msets::MSet& set, std::initializer_list<std::pair<const char*, const char*>> terms) {
    ezaw::TensorChain t(Z2);
    for (const auto& [a, b] : terms) t.add({set.decode(a), set.decode(b)}, 1);
    return t;
  };
  note("AW_msimp(12321)",
       ezaw::aw_multisimplicial(*s3, Chain::of(Z2, s3->decode("12321"))) ==
           tensor(*s3, {{"123", "12321"}, {"1231", "2321"}, {"1232", "1321"}, {"12321", "321"}}));
  note("AW_msimp(12121)",
       ezaw::aw_multisimplicial(*s2, Chain::of(Z2, s2->decode("12121"))) ==
           tensor(*s2, {{"12", "12121"}, {"122", "1121"}, {"121", "2121"}, {"1212", "121"}, {"1211", "221"},
                        {"12121", "21"}}));
  {
    const auto r = ezaw::verify_square(d2, s2->decode("12121"), Z2);
    const bool flagged = d2.is_degenerate(d2.decode("2211")) && d2.is_degenerate(d2.decode("1122")) &&
                         !r.aw_of_ez.coefficient({d2.decode("122211"), d2.decode("2211")}).is_zero() &&
                         !r.aw_of_ez.coefficient({d2.decode("1122"), d2.decode("112221")}).is_zero();
    note("degenerate factors", flagged && r.summands == 12 && r.with_degenerate_factor == 2 && r.equal);
  }
  o.detail = join(parts);
  return o;
}

Outcome tc_example() {
  const surjection::BarrattEccles be(3);
  const auto got = surjection::format_permutations(be, surjection::tc(be, {1, 2, 2, 3, 3, 3, 1, 1, 2}));
  return {got == "(123, 231, 312)", "tc(122333112) = " + got};
}

Outcome property_suite() {
  Outcome o;
  std::vector<std::string> parts;
  const std::vector<std::pair<std::string, MSetPtr>> sets = {
      {"Sur(2)", sur(2)},
      {"Sur(3)", sur(3)},
      {"Delta(2,2)", std::make_shared<msets::StandardMultisimplex>(MultiIndex{2, 2})},
      {"Delta(1,1,1)", std::make_shared<msets::StandardMultisimplex>(MultiIndex{1, 1, 1})},
      {"Delta(4)", std::make_shared<msets::StandardMultisimplex>(MultiIndex{4})},
  };
  for (const auto& [name, set] : sets) {
    ezaw::PropertyChecker checker(set);
    std::mt19937_64 rng(20240611);
    std::size_t failures = 0;
    std::optional<ezaw::PropertyFailure> first;
    for (int i = 0; i < kPropertySamples; ++i) {
      const auto x = checker.random_multisimplex(rng, kPropertyMaxTotal);
      if (auto f = checker.check(x, rng)) {
        ++failures;
        if (!first) first = f;
      }
    }
    std::size_t fewest = SIZE_MAX;
    for (const auto& [prop, n] : checker.counts())
      if (prop != "leibniz") fewest = std::min(fewest, n);
    o.pass = o.pass && failures == 0 && fewest >= kPropertySamples;
    parts.push_back(name + " " + std::to_string(kPropertySamples) + " inputs, " + std::to_string(failures) +
                    " failures" + (first ? " (" + first->property + " at " + first->input + ")" : ""));
  }
  o.detail = join(parts);
  return o;
}

Outcome shuffle_bijection() {
  std::size_t profiles = 0, mismatches = 0;
  for (int k = 1; k <= kShuffleMaxArity; ++k)
    for (int n = 0; n <= kShuffleMaxTotal; ++n)
      for (const auto& a : msets::multi_indices_of_total(k, n)) {
        ++profiles;
        const auto all = ezaw::enumerate_shuffles(a);
        std::size_t products = 0, split_points = 0;
        for (const auto& i : msets::multi_indices_below(a)) {
          const auto left = ezaw::enumerate_shuffles(i), right = ezaw::enumerate_shuffles(a - i);
          products += left.size() * right.size();
          for (const auto& p : left)
            for (const auto& q : right) {
              const auto back = ezaw::split_shuffle(ezaw::concat_shuffles(p, q), i);
              if (!back || back->first != p || back->second != q) ++mismatches;
            }
          for (const auto& s : all) split_points += ezaw::split_shuffle(s, i).has_value();
        }
        if (products != split_points) ++mismatches;
      }
  return {mismatches == 0, std::to_string(profiles) + " profiles, " + std::to_string(mismatches) + " mismatches"};
}

Outcome homology_regression() {
  struct Row {
    int k, d;
    std::vector<std::size_t> betti;
  };
  Outcome o;
  std::vector<std::string> parts;
  for (const auto& r : {Row{2, 2, {1, 1}}, Row{3, 2, {1, 3, 2}}, Row{2, 3, {1, 0, 1}}}) {
    const int top = static_cast<int>(r.betti.size()) - 1;
    const ComplexView view(sur(r.k, r.d), Ring::integers(), ChainMode::Normalized, top + 1);
    std::vector<std::size_t> got;
    bool torsion_free = true;
    for (const auto& g : view.homology(0, top)) {
      got.push_back(g.betti);
      torsion_free = torsion_free && g.torsion.empty();
    }
    const bool ok = got == r.betti && torsion_free;
    o.pass = o.pass && ok;
    std::string b;
    for (auto v : got) b += (b.empty() ? "" : ",") + std::to_string(v);
    parts.push_back("Sur_" + std::to_string(r.d) + "(" + std::to_string(r.k) + ") = (" + b + ")" +
                    (torsion_free ? "" : " with torsion"));
  }
  o.detail = join(parts);
  return o;
}

Outcome ez_ring_iso() {
  Outcome o;
  std::vector<std::string> parts;
  for (const auto& [set, ring, name] : std::vector<std::tuple<MSetPtr, Ring, std::string>>{
           {sur(2), Ring::mod(2), "Sur(2)/Z2"},
           {sur(2), Ring::rationals(), "Sur(2)/Q"},
           {sur(3), Ring::rationals(), "Sur(3)/Q"},
           // The full Sur(k) is acyclic; the stage-2 complexes carry the
           // configuration-space rings.
           {sur(2, 2), Ring::mod(2), "Sur_2(2)/Z2"},
           {sur(3, 2), Ring::rationals(), "Sur_2(3)/Q"}}) {
    const auto r = cohomtools::verify_ez_ring_iso(set, ring, 3);
    o.pass = o.pass && r.ok();
    parts.push_back(name + (r.ok() ? " ok (" + std::to_string(r.products_checked) + " class products, " +
                                         std::to_string(r.cochain_pairs_checked) + " cochain pairs)"
                                   : " " + r.failure.value_or("failed")));
  }
  o.detail = join(parts);
  return o;
}

Outcome normalization() {
  Outcome o;
  std::vector<std::string> parts;
  const ComplexView full(sur(2), Ring::integers(), ChainMode::Full, 3), norm(sur(2), Ring::integers(), ChainMode::Normalized, 3);
  const auto hc = full.homology(0, 2), hn = norm.homology(0, 2);
  bool same = true;
  for (std::size_t n = 0; n < 3; ++n) same = same && hc[n].betti == hn[n].betti && hc[n].torsion == hn[n].torsion;
  o.pass = same;
  parts.push_back(std::string("H(C) = H(N) through degree 2: ") + (same ? "yes" : "no"));

  const Ring Z = Ring::integers();
  std::size_t bad = 0;
  std::mt19937_64 rng(7);
  for (const auto& set : {sur(2), sur(3)}) {
    ezaw::PropertyChecker sampler(set);
    for (int i = 0; i < kNormalizationChains / 2; ++i) {
      const auto x = sampler.random_multisimplex(rng, 4);
      Chain c = Chain::of(Z, x, std::uniform_int_distribution<long>(1, 3)(rng));
      for (int extra = 0; extra < 2; ++extra) {
        const auto y = sampler.random_multisimplex(rng, 4);
        if (y.degree.total() == x.degree.total()) c.add(y, std::uniform_int_distribution<long>(-3, 3)(rng));
      }
      const Chain h = complexes::normalizing_map(*set, c);
      const Chain dc = complexes::boundary(*set, c);
      if (complexes::boundary(*set, h) != complexes::normalizing_map(*set, dc)) ++bad;
      if (c - h != complexes::boundary(*set, complexes::normalizing_homotopy(*set, c)) + complexes::normalizing_homotopy(*set, dc))
        ++bad;
    }
  }
  o.pass = o.pass && bad == 0;
  parts.push_back(std::to_string(kNormalizationChains) + " chains, " + std::to_string(bad) + " identity failures");
  o.detail = join(parts);
  return o;
}

Outcome massey() {
  Outcome o;
  std::vector<std::string> parts;
  for (const auto& [set, ring, name] : std::vector<std::tuple<MSetPtr, Ring, std::string>>{
           {sur(2), Ring::mod(2), "Sur(2)/Z2"},
           {sur(3), Ring::rationals(), "Sur(3)/Q"},
           {sur(2, 2), Ring::mod(2), "Sur_2(2)/Z2"},
           {sur(3, 2), Ring::rationals(), "Sur_2(3)/Q"},
           {sur(3, 2), Ring::mod(2), "Sur_2(3)/Z2"}}) {
    const ComplexView view(set, ring, ChainMode::Normalized, 3);
    const cohomtools::CohomologyModel model(view, 2);
    const auto s = cohomtools::massey_sweep(model);
    const bool ok = s.nonvanishing.empty() && s.vanishing == s.admissible;
    o.pass = o.pass && ok;
    parts.push_back(name + " " + std::to_string(s.vanishing) + "/" + std::to_string(s.admissible) + " vanish" +
                    (s.exhaustive ? " (exhaustive)" : ""));
  }
  o.detail = join(parts);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--only", only, "run one criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"counting polynomials", counting_polynomials},
      {"golden examples over Z2", golden_examples},
      {"tc example", tc_example},
      {"property suite over Z", property_suite},
      {"shuffle bijection", shuffle_bijection},
      {"homology regression", homology_regression},
      {"EZ* ring isomorphism", ez_ring_iso},
      {"normalization", normalization},
      {"Massey products", massey},
  };
  int failed = 0;
  for (std::size_t n = 1; n <= criteria.size(); ++n) {
    if (only && static_cast<std::size_t>(only) != n) continue;
    const auto& [name, run] = criteria[n - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= kBudgetSeconds[n];
    const bool pass = o.pass && in_budget;
    failed += !pass;
    std::printf("%s %zu %s (%.2f s%s): %s\n", pass ? "PASS" : "FAIL", n, name.c_str(), secs,
                in_budget ? "" : ", over budget", o.detail.c_str());
    std::fflush(stdout);
  }
  return std::min(failed, 125);
}
