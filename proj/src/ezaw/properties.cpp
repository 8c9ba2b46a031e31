#include "multichain/ezaw/properties.hpp"

#include "multichain/error.hpp"

namespace multichain::ezaw {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_of(const Multisimplex& x, std::uint64_t salt) {
  std::uint64_t h = splitmix(salt);
  for (auto v : x.payload) h = splitmix(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
  for (int d : x.degree.degrees()) h = splitmix(h ^ (0x100000000ULL + static_cast<std::uint64_t>(d)));
  return h;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

PropertyChecker::PropertyChecker(msets::MSetPtr set, Ring ring)
    : set_(std::move(set)), diagonal_(std::make_shared<msets::Diagonal>(set_)), ring_(ring) {}

Multisimplex PropertyChecker::random_multisimplex(std::mt19937_64& rng, int max_total) const {
  std::vector<std::vector<msets::MultiIndex>> nonempty;
  for (int n = 0; n <= max_total; ++n) {
    std::vector<msets::MultiIndex> degrees;
    for (const auto& d : msets::multi_indices_of_total(set_->k(), n))
      if (!set_->enumerate(d).empty()) degrees.push_back(d);
    if (!degrees.empty()) nonempty.push_back(std::move(degrees));
  }
  if (nonempty.empty()) throw NotEnumerable(set_->name() + " has no multisimplices up to degree " + std::to_string(max_total));
  const auto& degrees = nonempty[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(nonempty.size()) - 1))];
  const auto& degree = degrees[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(degrees.size()) - 1))];
  const auto& xs = set_->enumerate(degree);
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

CochainFunction PropertyChecker::random_cochain(int degree, std::uint64_t salt) const {
  const Ring ring = ring_;
  return [ring, degree, salt](const Multisimplex& y) {
    if (y.degree.total() != degree) return Coefficient(ring);
    return Coefficient(ring, static_cast<long>(hash_of(y, salt) % 5) - 2);
  };
}

PropertyFailure PropertyChecker::failure(const std::string& property, const Multisimplex& x, std::string detail) const {
  return {property, set_->encode(x) + " " + x.degree.to_string(), std::move(detail)};
}

std::optional<PropertyFailure> PropertyChecker::boundary_squared(const Multisimplex& x) {
  ++counts_["boundary_squared"];
  for (auto mode : {ChainMode::Full, ChainMode::Normalized}) {
    const Chain dd = complexes::boundary(*set_, complexes::boundary(*set_, x, ring_, mode), mode);
    if (!dd.is_zero()) return failure("boundary_squared", x, "dd x = " + complexes::format_chain(*set_, dd));
  }
  return std::nullopt;
}

std::optional<PropertyFailure> PropertyChecker::ez_chain_map(const Multisimplex& x) {
  ++counts_["ez_chain_map"];
  const Chain c = Chain::of(ring_, x);
  const Chain lhs = complexes::boundary(*diagonal_, ez_multisimplicial(*diagonal_, c));
  const Chain rhs = ez_multisimplicial(*diagonal_, complexes::boundary(*set_, c));
  if (lhs != rhs)
    return failure("ez_chain_map", x,
                   "d EZ = " + complexes::format_chain(*diagonal_, lhs) + " but EZ d = " +
                       complexes::format_chain(*diagonal_, rhs));
  return std::nullopt;
}

std::optional<PropertyFailure> PropertyChecker::aw_simp_chain_map(const Multisimplex& x) {
  ++counts_["aw_simp_chain_map"];
  const Chain e = ez_multisimplicial(*diagonal_, Chain::of(ring_, x));
  const auto lhs = tensor_boundary(*diagonal_, *diagonal_, aw_simplicial(*diagonal_, e));
  const auto rhs = aw_simplicial(*diagonal_, complexes::boundary(*diagonal_, e));
  if (lhs != rhs) return failure("aw_simp_chain_map", x, "on EZ x: " + format_tensor(*diagonal_, *diagonal_, lhs - rhs));
  return std::nullopt;
}

std::optional<PropertyFailure> PropertyChecker::aw_msimp_chain_map(const Multisimplex& x) {
  ++counts_["aw_msimp_chain_map"];
  const Chain c = Chain::of(ring_, x);
  const auto lhs = tensor_boundary(*set_, *set_, aw_multisimplicial(*set_, c));
  const auto rhs = aw_multisimplicial(*set_, complexes::boundary(*set_, c));
  if (lhs != rhs) return failure("aw_msimp_chain_map", x, "d AW - AW d = " + format_tensor(*set_, *set_, lhs - rhs));
  return std::nullopt;
}

std::optional<PropertyFailure> PropertyChecker::aw_coassociative(const Multisimplex& x) {
  ++counts_["aw_coassociative"];
  const auto [left, right] = aw_coassociativity_sides(*set_, Chain::of(ring_, x));
  if (left != right) return failure("aw_coassociative", x, "difference " + format_tensor(*set_, left - right));
  return std::nullopt;
}

std::optional<PropertyFailure> PropertyChecker::square_commutes(const Multisimplex& x) {
  ++counts_["square_commutes"];
  const auto r = verify_square(*diagonal_, x, ring_);
  if (!r.equal)
    return failure("square_commutes", x,
                   "AW EZ - (EZ⊗EZ) AW = " + format_tensor(*diagonal_, *diagonal_, r.aw_of_ez - r.ez_of_aw));
  return std::nullopt;
}

std::optional<PropertyFailure> PropertyChecker::cup_associative(const Multisimplex& x, std::mt19937_64& rng) {
  ++counts_["cup_associative"];
  const int n = x.degree.total();
  const int p = uniform(rng, 0, n);
  const int q = uniform(rng, 0, n - p);
  const int r = n - p - q;
  const std::uint64_t salt = rng();
  const auto a = random_cochain(p, salt), b = random_cochain(q, salt + 1), c = random_cochain(r, salt + 2);
  const MSet& set = *set_;
  const Ring ring = ring_;
  const CochainFunction ab = [&](const Multisimplex& y) { return cup_evaluate(set, ring, a, p, b, y); };
  const CochainFunction bc = [&](const Multisimplex& y) { return cup_evaluate(set, ring, b, q, c, y); };
  const Coefficient lhs = cup_evaluate(set, ring, ab, p + q, c, x);
  const Coefficient rhs = cup_evaluate(set, ring, a, p, bc, x);
  if (lhs != rhs)
    return failure("cup_associative", x,
                   "degrees (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                       "): " + lhs.to_string() + " vs " + rhs.to_string());
  return std::nullopt;
}

std::optional<PropertyFailure> PropertyChecker::leibniz(const Multisimplex& x, std::mt19937_64& rng) {
  const int n = x.degree.total();
  if (n == 0) return std::nullopt;
  ++counts_["leibniz"];
  const int p = uniform(rng, 0, n - 1);
  const int q = n - 1 - p;
  const std::uint64_t salt = rng();
  const auto a = random_cochain(p, salt), b = random_cochain(q, salt + 1);
  const MSet& set = *set_;
  const Ring ring = ring_;
  auto delta = [&](const CochainFunction& f) -> CochainFunction {
    return [&set, ring, f](const Multisimplex& z) {
      Coefficient sum(ring);
      const Chain dz = complexes::boundary(set, z, ring);
      for (const auto& [y, c] : dz.terms()) sum += c * f(y);
      return sum;
    };
  };
  Coefficient lhs(ring);
  const Chain dx = complexes::boundary(set, x, ring);
  for (const auto& [y, c] : dx.terms()) lhs += c * cup_evaluate(set, ring, a, p, b, y);
  Coefficient rhs = cup_evaluate(set, ring, delta(a), p + 1, b, x);
  const Coefficient second = cup_evaluate(set, ring, a, p, delta(b), x);
  rhs += p % 2 == 0 ? second : -second;
  if (lhs != rhs)
    return failure("leibniz", x,
                   "degrees (" + std::to_string(p) + "," + std::to_string(q) + "): " + lhs.to_string() + " vs " +
                       rhs.to_string());
  return std::nullopt;
}

std::optional<PropertyFailure> PropertyChecker::check(const Multisimplex& x, std::mt19937_64& rng) {
  if (auto f = boundary_squared(x)) return f;
  if (auto f = ez_chain_map(x)) return f;
  if (auto f = aw_simp_chain_map(x)) return f;
  if (auto f = aw_msimp_chain_map(x)) return f;
  if (auto f = aw_coassociative(x)) return f;
  if (auto f = square_commutes(x)) return f;
  if (auto f = cup_associative(x, rng)) return f;
  if (auto f = leibniz(x, rng)) return f;
  return std::nullopt;
}

}  // namespace multichain::ezaw
