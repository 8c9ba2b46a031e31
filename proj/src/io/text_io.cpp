#include "multichain/io/text_io.hpp"

#include <cctype>
#include <charconv>

#include "multichain/error.hpp"
#include "multichain/msets/instances.hpp"
#include "multichain/surjection/sets.hpp"

namespace multichain::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected an integer in '" + std::string(context) + "'");
  return v;
}

}  // namespace

msets::MultiIndex parse_multi_index(std::string_view text) {
  std::vector<int> degrees;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    const auto cut = rest.find_first_of(", ");
    degrees.push_back(parse_int(rest.substr(0, cut), text));
    if (degrees.back() < 0) throw ParseError("negative degree in '" + std::string(text) + "'");
    if (cut == std::string_view::npos) break;
    rest = trim(rest.substr(cut + 1));
  }
  if (degrees.empty()) throw ParseError("empty multidegree");
  return msets::MultiIndex(std::move(degrees));
}

InstanceSpec parse_instance(std::string_view text) {
  InstanceSpec spec;
  if (text.substr(0, 4) == "std:") {
    spec.family = InstanceSpec::Family::Standard;
    spec.targets = parse_multi_index(text.substr(4));
    spec.k = spec.targets.k();
    return spec;
  }
  std::string_view rest;
  if (text.substr(0, 3) == "sur") {
    spec.family = InstanceSpec::Family::Surjection;
    rest = text.substr(3);
  } else if (text.substr(0, 2) == "be") {
    spec.family = InstanceSpec::Family::BarrattEccles;
    rest = text.substr(2);
  } else {
    throw ParseError("unknown instance '" + std::string(text) + "' (expected sur<k>[:d], be<k>[:d] or std:i1,...)");
  }
  const auto colon = rest.find(':');
  spec.k = parse_int(rest.substr(0, colon), text);
  if (spec.k < 1) throw ParseError("arity must be positive in '" + std::string(text) + "'");
  if (colon != std::string_view::npos) {
    spec.d = parse_int(rest.substr(colon + 1), text);
    if (*spec.d < 0) throw ParseError("negative filtration stage in '" + std::string(text) + "'");
  }
  return spec;
}

msets::MSetPtr make_instance(const InstanceSpec& spec, std::optional<int> fallback_d) {
  std::optional<int> d = spec.d ? spec.d : fallback_d;
  if (d && *d == 0) d.reset();
  switch (spec.family) {
    case InstanceSpec::Family::Surjection: return std::make_shared<surjection::SurjectionSet>(spec.k, d);
    case InstanceSpec::Family::BarrattEccles: return std::make_shared<surjection::BarrattEccles>(spec.k, d);
    case InstanceSpec::Family::Standard: return std::make_shared<msets::StandardMultisimplex>(spec.targets);
  }
  throw ParseError("unknown instance family");
}

std::vector<std::pair<msets::Multisimplex, exactlin::Coefficient>> parse_terms(const msets::MSet& set,
                                                                                const exactlin::Ring& ring,
                                                                                std::string_view text) {
  std::vector<std::pair<msets::Multisimplex, exactlin::Coefficient>> out;
  std::string_view rest = trim(text);
  if (rest.empty()) throw ParseError("empty linear combination");
  bool negative = false;
  if (rest.front() == '-' || rest.front() == '+') {
    negative = rest.front() == '-';
    rest = trim(rest.substr(1));
  }
  while (true) {
    const auto cut = rest.find_first_of("+-");
    std::string_view term = trim(rest.substr(0, cut));
    if (term.empty()) throw ParseError("missing term in '" + std::string(text) + "'");
    exactlin::Coefficient c(ring, 1);
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      c = exactlin::Coefficient::parse(ring, std::string(trim(term.substr(0, star))));
      term = trim(term.substr(star + 1));
    }
    out.emplace_back(set.decode(term), negative ? -c : c);
    if (cut == std::string_view::npos) break;
    negative = rest[cut] == '-';
    rest = trim(rest.substr(cut + 1));
  }
  return out;
}

}  // namespace multichain::io
