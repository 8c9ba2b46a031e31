// multichain: command-line front end.
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "multichain/cohomtools/cohomology.hpp"
#include "multichain/cohomtools/products.hpp"
#include "multichain/error.hpp"
#include "multichain/ezaw/properties.hpp"
#include "multichain/io/json_io.hpp"
#include "multichain/io/text_io.hpp"
#include "multichain/surjection/counting.hpp"
#include "multichain/surjection/sets.hpp"
#include "multichain/surjection/tc.hpp"

using namespace multichain;
using json = nlohmann::json;
using complexes::Chain;
using complexes::ChainMode;
using complexes::Cochain;
using complexes::ComplexView;
using exactlin::Coefficient;
using exactlin::Ring;

namespace {

struct Options {
  std::string instance = "sur2";
  std::string family = "sur";
  int k = 2;
  std::optional<int> d;
  std::string ring;
  int cap = 3;
  int samples = 100;
  std::uint64_t seed = 0;
  int max_degree = 4;
  std::string format = "text";
  std::string from_json;
  std::string degree;
  std::string left, right;
  bool nondegenerate = false;
  bool full = false;
  bool ez_iso = false;
  bool big_tc = false;
  bool filtration = false;
  std::vector<std::string> sequences;
};

bool as_json(const Options& o) { return o.format == "json"; }

void print(const Options& o, const json& j, const std::string& text) {
  if (as_json(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

msets::MSetPtr instance(const Options& o, std::optional<int> default_d) {
  return io::make_instance(io::parse_instance(o.instance), o.d ? o.d : default_d);
}

Ring ring_or(const Options& o, const char* fallback) { return Ring::parse(o.ring.empty() ? fallback : o.ring); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) {
    std::ostringstream s;
    s << x;
    out.push_back(s.str());
  }
  return out;
}

std::vector<std::string> strings(const std::vector<Coefficient>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

// --- count ---------------------------------------------------------------

int cmd_count(const Options& o) {
  if (!o.d || *o.d < 1) throw ParseError("count needs --d >= 1");
  if (o.k < 1) throw ParseError("count needs --k >= 1");
  surjection::CountingPolynomial p;
  if (o.family == "sur")
    p = surjection::counting_polynomial_sur(o.k, *o.d);
  else if (o.family == "be")
    p = surjection::counting_polynomial_be(o.k, *o.d, o.cap);
  else
    throw ParseError("unknown family '" + o.family + "' (expected sur or be)");
  const mpz_class factor = surjection::factorial(o.k);
  const std::string factored = p.factored(factor);
  json j{{"family", o.family},
         {"k", o.k},
         {"d", *o.d},
         {"coefficients", strings(p.coefficients)},
         {"factored", factored},
         {"total", p.value_at_one().get_str()}};
  print(o, j, factored + "\ncoefficients: " + join(strings(p.coefficients), ", ") + "\n");
  return 0;
}

// --- enumerate -----------------------------------------------------------

int cmd_enumerate(const Options& o) {
  const auto set = instance(o, std::nullopt);
  if (!o.from_json.empty()) {
    const Chain c = io::chain_from_json(*set, read_json_file(o.from_json));
    print(o, io::to_json(*set, c), complexes::format_chain(*set, c) + "\n");
    return 0;
  }
  if (o.degree.empty()) throw ParseError("enumerate needs --degree or --from-json");
  const auto degree = io::parse_multi_index(o.degree);
  if (degree.k() != set->k())
    throw ParseError("degree " + degree.to_string() + " has the wrong arity for " + set->name());
  const auto& xs = o.nondegenerate ? set->enumerate_nondegenerate(degree) : set->enumerate(degree);
  std::vector<std::string> gens;
  for (const auto& x : xs) gens.push_back(set->encode(x));
  json j{{"instance", set->name()}, {"degree", io::degree_json(degree)}, {"count", gens.size()}, {"generators", gens}};
  print(o, j, gens.empty() ? std::string() : join(gens, "\n") + "\n");
  return 0;
}

// --- homology ------------------------------------------------------------

std::string torsion_text(const std::vector<mpz_class>& t) {
  if (t.empty()) return "";
  std::vector<std::string> parts;
  for (const auto& v : t) parts.push_back("Z/" + v.get_str());
  return " + " + join(parts, " + ");
}

int cmd_homology(const Options& o) {
  const auto set = instance(o, 2);
  const Ring ring = ring_or(o, "Z");
  if (o.cap < 1) throw ParseError("homology needs --cap >= 1");
  const ComplexView view(set, ring, o.full ? ChainMode::Full : ChainMode::Normalized, o.cap);
  const auto groups = view.homology(0, o.cap - 1);
  json jg = json::array();
  std::vector<std::size_t> betti;
  std::string text;
  for (const auto& g : groups) {
    betti.push_back(g.betti);
    std::vector<std::string> torsion;
    for (const auto& t : g.torsion) torsion.push_back(t.get_str());
    jg.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}});
    text += "H_" + std::to_string(g.degree) + ": rank " + std::to_string(g.betti) + torsion_text(g.torsion) + "\n";
  }
  json j{{"instance", set->name()},
         {"ring", ring.name()},
         {"mode", o.full ? "full" : "normalized"},
         {"groups", jg},
         {"betti", betti}};
  print(o, j, set->name() + " over " + ring.name() + (o.full ? " (C_*)" : " (N_*)") + "\n" + text +
                  "betti: [" + join(strings(betti), ", ") + "]\n");
  return 0;
}

// --- ring ----------------------------------------------------------------

std::string class_combination(int degree, const std::vector<Coefficient>& coords) {
  std::string s;
  for (std::size_t m = 0; m < coords.size(); ++m) {
    if (coords[m].is_zero()) continue;
    Coefficient c = coords[m];
    const bool negative = c.ring().kind() != exactlin::RingKind::ModP && sgn(c.value()) < 0;
    if (negative) c = -c;
    s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (!c.is_one()) s += c.to_string() + "*";
    s += "h" + std::to_string(degree) + "." + std::to_string(m);
  }
  return s.empty() ? "0" : s;
}

int cmd_ring(const Options& o) {
  const auto set = instance(o, 2);
  const Ring ring = ring_or(o, "Q");
  if (o.cap < 1) throw ParseError("ring needs --cap >= 1");
  if (o.ez_iso) {
    if (!ring.is_field()) throw NotAField("the ring comparison needs Q or Zp coefficients");
    const auto r = cohomtools::verify_ez_ring_iso(set, ring, o.cap);
    json j{{"instance", set->name()},
           {"ring", ring.name()},
           {"betti", r.betti_set},
           {"betti_diagonal", r.betti_diagonal},
           {"cocycles_preserved", r.cocycles_preserved},
           {"isomorphism", r.isomorphism},
           {"structure_constants_agree", r.structure_constants_agree},
           {"cochain_multiplicative", r.cochain_multiplicative},
           {"products_checked", r.products_checked},
           {"ok", r.ok()}};
    if (r.failure) j["failure"] = *r.failure;
    std::string text = "H^*(" + set->name() + ") betti [" + join(strings(r.betti_set), ", ") + "], H^*(diagonal) betti [" +
                       join(strings(r.betti_diagonal), ", ") + "]\n";
    text += "products checked: " + std::to_string(r.products_checked) + "\n";
    if (r.failure) text += "failure: " + *r.failure + "\n";
    text += r.ok() ? "EZ* is a ring isomorphism\n" : "EZ* comparison FAILED\n";
    print(o, j, text);
    return r.ok() ? 0 : 1;
  }
  const ComplexView view(set, ring, ChainMode::Normalized, o.cap);
  const auto pres = cohomtools::cohomology_ring(view, o.cap - 1, ring.is_field());
  json j{{"instance", set->name()}, {"ring", ring.name()}, {"betti", pres.betti()}};
  std::string text = "H^*(" + set->name() + "; " + ring.name() + ")\nbetti: [" + join(strings(pres.betti()), ", ") + "]\n";
  if (!ring.is_field()) {
    json torsion = json::array();
    for (const auto& g : pres.groups) {
      std::vector<std::string> t;
      for (const auto& v : g.torsion) t.push_back(v.get_str());
      torsion.push_back(t);
      if (!g.torsion.empty()) text += "H^" + std::to_string(g.degree) + " torsion:" + torsion_text(g.torsion) + "\n";
    }
    j["torsion"] = torsion;
  }
  if (pres.has_products) {
    json reps = json::array();
    for (std::size_t n = 0; n < pres.representatives.size(); ++n)
      for (std::size_t i = 0; i < pres.representatives[n].size(); ++i) {
        reps.push_back({{"class", "h" + std::to_string(n) + "." + std::to_string(i)},
                        {"cochain", io::to_json(*set, pres.representatives[n][i])}});
        text += "h" + std::to_string(n) + "." + std::to_string(i) + " = [" +
                complexes::format_chain(*set, [&] {
                  Chain c(ring);
                  for (const auto& [x, v] : pres.representatives[n][i].values()) c.add(x, v);
                  return c;
                }()) +
                "]*\n";
      }
    json products = json::array();
    for (const auto& pr : pres.products) {
      products.push_back({{"left", {pr.p, pr.i}}, {"right", {pr.q, pr.j}}, {"coords", strings(pr.coords)}});
      text += "h" + std::to_string(pr.p) + "." + std::to_string(pr.i) + " * h" + std::to_string(pr.q) + "." +
              std::to_string(pr.j) + " = " + class_combination(pr.p + pr.q, pr.coords) + "\n";
    }
    j["representatives"] = reps;
    j["products"] = products;
  }
  print(o, j, text);
  return 0;
}

// --- cup -----------------------------------------------------------------

Cochain read_cochain(const msets::MSet& set, const Ring& ring, const std::string& arg, const char* which) {
  if (arg.empty()) throw ParseError(std::string("cup needs --") + which);
  if (arg.front() == '@') {
    Cochain a = io::cochain_from_json(set, read_json_file(arg.substr(1)));
    if (a.ring() != ring) throw RingMismatch(std::string("--") + which + " is over " + a.ring().name());
    return a;
  }
  const auto terms = io::parse_terms(set, ring, arg);
  Cochain a(ring, terms.front().first.degree.total());
  for (const auto& [x, c] : terms) {
    if (x.degree.total() != a.degree()) throw ParseError(std::string("--") + which + " mixes total degrees");
    a.add(x, c);
  }
  return a;
}

int cmd_cup(const Options& o) {
  const auto set = instance(o, std::nullopt);
  const Ring ring = ring_or(o, "Z");
  const Cochain a = read_cochain(*set, ring, o.left, "left");
  const Cochain b = read_cochain(*set, ring, o.right, "right");
  const ComplexView view(set, ring, o.full ? ChainMode::Full : ChainMode::Normalized, a.degree() + b.degree() + 1);
  const Cochain ab = ezaw::cup(view, a, b);
  Chain shown(ring);
  for (const auto& [x, v] : ab.values()) shown.add(x, v);
  print(o, io::to_json(*set, ab), "degree " + std::to_string(ab.degree()) + ": " + complexes::format_chain(*set, shown) + "\n");
  return 0;
}

// --- verify --------------------------------------------------------------

int cmd_verify(const Options& o) {
  const auto spec = io::parse_instance(o.instance);
  const auto set = io::make_instance(spec, o.d);
  const Ring ring = ring_or(o, "Z");
  ezaw::PropertyChecker checker(set, ring);
  std::mt19937_64 rng(o.seed);

  std::vector<msets::Multisimplex> inputs;
  if (spec.family == io::InstanceSpec::Family::Surjection) {
    // 12121 and 12321 are always part of the run.
    for (const char* fixed : {"12121", "12321"}) {
      const auto* sur = dynamic_cast<const surjection::SurjectionSet*>(set.get());
      try {
        auto x = sur->decode(fixed);
        inputs.push_back(std::move(x));
      } catch (const ParseError&) {
      }
    }
  }
  for (int i = 0; i < o.samples; ++i) inputs.push_back(checker.random_multisimplex(rng, o.max_degree));

  std::optional<ezaw::PropertyFailure> failure;
  for (const auto& x : inputs)
    if ((failure = checker.check(x, rng))) break;

  json counts = json::object();
  std::string text = set->name() + " over " + ring.name() + ", " + std::to_string(inputs.size()) + " inputs, seed " +
                     std::to_string(o.seed) + "\n";
  for (const auto& [name, n] : checker.counts()) {
    counts[name] = n;
    text += "  " + name + ": " + std::to_string(n) + "\n";
  }
  json j{{"instance", set->name()}, {"ring", ring.name()}, {"seed", o.seed}, {"inputs", inputs.size()}, {"checks", counts}};
  if (failure) {
    j["ok"] = false;
    j["failure"] = {{"property", failure->property}, {"input", failure->input}, {"detail", failure->detail}};
    text += "FAIL " + failure->property + " at " + failure->input + ": " + failure->detail + "\n";
  } else {
    j["ok"] = true;
    text += "PASS\n";
  }
  print(o, j, text);
  return failure ? 1 : 0;
}

// --- tc ------------------------------------------------------------------

int max_value(const std::string& seq) {
  int k = 0;
  if (seq.find(',') != std::string::npos) {
    std::stringstream s(seq);
    std::string part;
    while (std::getline(s, part, ',')) k = std::max(k, std::stoi(part));
  } else {
    for (char ch : seq) {
      if (ch < '1' || ch > '9') throw ParseError("bad surjection '" + seq + "'");
      k = std::max(k, ch - '0');
    }
  }
  if (k < 1) throw ParseError("empty surjection");
  return k;
}

int cmd_tc(const Options& o) {
  if (o.filtration) {
    if (o.k < 1 || !o.d || *o.d < 1) throw ParseError("tc --filtration needs --k and --d >= 1");
    const auto r = surjection::tc_respects_filtration(o.k, *o.d, o.cap);
    json j{{"k", r.k},
           {"d", r.d},
           {"max_degree", r.max_degree},
           {"forward", {{"checked", r.forward_checked}, {"violations", r.forward_violations}}},
           {"reverse", {{"checked", r.reverse_checked}, {"violations", r.reverse_violations}}}};
    if (r.forward_counterexample) j["forward"]["counterexample"] = *r.forward_counterexample;
    if (r.reverse_counterexample) j["reverse"]["counterexample"] = *r.reverse_counterexample;
    std::string text = "Sur_" + std::to_string(r.d) + "(" + std::to_string(r.k) + ")^D -> BE_" + std::to_string(r.d) +
                       "(" + std::to_string(r.k) + "), degrees <= " + std::to_string(r.max_degree) + ": " +
                       std::to_string(r.forward_checked) + " checked, " + std::to_string(r.forward_violations) +
                       " violations\n";
    if (r.forward_counterexample) text += "  e.g. " + *r.forward_counterexample + "\n";
    text += "BE_" + std::to_string(r.d) + "(" + std::to_string(r.k) + ") preimages in Sur_" + std::to_string(r.d) + "(" +
            std::to_string(r.k) + ")^D: " + std::to_string(r.reverse_checked) + " checked, " +
            std::to_string(r.reverse_violations) + " violations\n";
    if (r.reverse_counterexample) text += "  e.g. " + *r.reverse_counterexample + "\n";
    print(o, j, text);
    return r.forward_violations == 0 ? 0 : 1;
  }
  if (o.sequences.empty()) throw ParseError("tc needs a sequence, or --filtration");
  json results = json::array();
  std::string text;
  for (const auto& seq : o.sequences) {
    const int k = max_value(seq);
    const surjection::BarrattEccles be(k);
    if (o.big_tc) {
      const auto sur = std::make_shared<surjection::SurjectionSet>(k);
      const msets::Diagonal diagonal(sur);
      const Ring ring = ring_or(o, "Z");
      const Chain image = surjection::TC(diagonal, be, Chain::of(ring, sur->decode(seq)));
      results.push_back({{"input", seq}, {"TC", io::to_json(be, image)}});
      text += "TC(" + seq + ") = " + complexes::format_chain(be, image) + "\n";
    } else {
      const surjection::SurjectionSet sur(k);
      const auto x = surjection::tc(be, sur.decode(seq).payload);
      const std::string shown = surjection::format_permutations(be, x);
      results.push_back({{"input", seq}, {"tc", be.encode(x)}, {"permutations", shown}});
      text += shown + "\n";
    }
  }
  print(o, results.size() == 1 ? results[0] : results, text);
  return 0;
}

// --- massey --------------------------------------------------------------

int cmd_massey(const Options& o) {
  const auto set = instance(o, 2);
  const Ring ring = ring_or(o, "Q");
  if (!ring.is_field()) throw NotAField("Massey products need Q or Zp coefficients");
  if (o.cap < 1) throw ParseError("massey needs --cap >= 1");
  const ComplexView view(set, ring, ChainMode::Normalized, o.cap);
  const cohomtools::CohomologyModel model(view, o.cap - 1);
  const auto sweep = cohomtools::massey_sweep(model);
  json nonvanishing = json::array();
  std::string text = set->name() + " over " + ring.name() + ": " + std::to_string(sweep.admissible) +
                     " admissible triples, " + std::to_string(sweep.vanishing) + " vanish modulo indeterminacy" +
                     (sweep.exhaustive ? " (exhaustive)" : "") + "\n";
  for (const auto& r : sweep.nonvanishing) {
    nonvanishing.push_back({{"degrees", {r.degrees[0], r.degrees[1], r.degrees[2]}},
                            {"a", strings(r.a)},
                            {"b", strings(r.b)},
                            {"c", strings(r.c)},
                            {"class", strings(r.coords)},
                            {"indeterminacy_dimension", r.indeterminacy_dimension}});
    text += "  nonzero <a,b,c> in degrees (" + std::to_string(r.degrees[0]) + "," + std::to_string(r.degrees[1]) + "," +
            std::to_string(r.degrees[2]) + "): " +
            class_combination(r.degrees[0] + r.degrees[1] + r.degrees[2] - 1, r.coords) + "\n";
  }
  json j{{"instance", set->name()},
         {"ring", ring.name()},
         {"admissible", sweep.admissible},
         {"vanishing", sweep.vanishing},
         {"exhaustive", sweep.exhaustive},
         {"nonvanishing", nonvanishing}};
  print(o, j, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multichain: multisimplicial chains, EZ/AW maps and surjection complexes"};
  app.require_subcommand(1);
  Options o;

  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto inst = [&](CLI::App* c) {
    c->add_option("--instance", o.instance, "sur<k>[:d], be<k>[:d] or std:i1,...,ik");
    c->add_option("--d", o.d, "filtration stage (0 = unfiltered)")->check(CLI::NonNegativeNumber);
  };
  auto ring = [&](CLI::App* c) { c->add_option("--ring", o.ring, "Z, Q or Zp:<p>"); };
  auto cap = [&](CLI::App* c, const char* help) { c->add_option("--cap", o.cap, help)->check(CLI::NonNegativeNumber); };

  auto* count = app.add_subcommand("count", "generator-counting polynomial of Sur_d(k) or BE_d(k)");
  count->add_option("--family", o.family, "sur or be")->check(CLI::IsMember({"sur", "be"}));
  count->add_option("--k", o.k, "arity")->required();
  count->add_option("--d", o.d, "filtration stage")->required();
  cap(count, "degree cap for BE (safety bound)");
  format(count);

  auto* enumerate = app.add_subcommand("enumerate", "list generators, or re-print a chain given as JSON");
  inst(enumerate);
  enumerate->add_option("--degree", o.degree, "multidegree, e.g. 1,0");
  enumerate->add_flag("--nondegenerate", o.nondegenerate, "only non-degenerate generators");
  enumerate->add_option("--from-json", o.from_json, "chain JSON file");
  format(enumerate);

  auto* homology = app.add_subcommand("homology", "homology of the chain complex, degrees below the cap");
  inst(homology);
  ring(homology);
  cap(homology, "degrees 0..cap-1");
  homology->add_flag("--full", o.full, "use C_* instead of N_*");
  format(homology);

  auto* ringcmd = app.add_subcommand("ring", "cohomology ring with cup-product structure constants");
  inst(ringcmd);
  ring(ringcmd);
  cap(ringcmd, "degrees 0..cap-1");
  ringcmd->add_flag("--ez-iso", o.ez_iso, "compare with the diagonal through EZ*");
  format(ringcmd);

  auto* cupcmd = app.add_subcommand("cup", "cup product of two cochains");
  inst(cupcmd);
  ring(cupcmd);
  cupcmd->add_option("--left", o.left, "c*gen + ... or @file.json");
  cupcmd->add_option("--right", o.right, "c*gen + ... or @file.json");
  cupcmd->add_flag("--full", o.full, "evaluate on C_* instead of N_*");
  format(cupcmd);

  auto* verify = app.add_subcommand("verify", "exact checks of the chain-level identities on random inputs");
  inst(verify);
  ring(verify);
  verify->add_option("--samples", o.samples, "random inputs")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "generator seed");
  verify->add_option("--max-degree", o.max_degree, "total degree bound")->check(CLI::NonNegativeNumber);
  format(verify);

  auto* tccmd = app.add_subcommand("tc", "the comparison map Sur(k)^D -> BE(k)");
  tccmd->add_option("sequences", o.sequences, "diagonal simplices, e.g. 122333112");
  tccmd->add_flag("--TC", o.big_tc, "apply TC = tc EZ to the sequence as a surjection");
  tccmd->add_flag("--filtration", o.filtration, "check that tc respects the complexity filtration");
  tccmd->add_option("--k", o.k, "arity for --filtration");
  tccmd->add_option("--d", o.d, "stage for --filtration");
  ring(tccmd);
  cap(tccmd, "diagonal degree bound for --filtration");
  format(tccmd);

  auto* massey = app.add_subcommand("massey", "triple Massey products modulo indeterminacy");
  inst(massey);
  ring(massey);
  cap(massey, "degrees 0..cap-1");
  format(massey);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) {
      if (!count->count("--cap")) o.cap = 64;
      return cmd_count(o);
    }
    if (*enumerate) return cmd_enumerate(o);
    if (*homology) return cmd_homology(o);
    if (*ringcmd) return cmd_ring(o);
    if (*cupcmd) return cmd_cup(o);
    if (*verify) return cmd_verify(o);
    if (*tccmd) {
      if (o.filtration && !tccmd->count("--cap")) o.cap = 2;
      return cmd_tc(o);
    }
    if (*massey) return cmd_massey(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
