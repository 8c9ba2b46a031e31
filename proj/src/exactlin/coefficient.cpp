#include "multichain/exactlin/coefficient.hpp"

#include <charconv>
#include <ostream>

#include "multichain/error.hpp"

namespace multichain::exactlin {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::mod(std::uint32_t p) {
  if (!is_prime(p)) throw ParseError("modulus " + std::to_string(p) + " is not prime");
  return Ring(RingKind::ModP, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  std::string_view digits;
  if (text.substr(0, 3) == "Zp:")
    digits = text.substr(3);
  else if (text.size() > 1 && text[0] == 'Z')
    digits = text.substr(1);
  else
    throw ParseError("unknown ring '" + std::string(text) + "' (expected Z, Q or Zp:<p>)");
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("bad modulus in ring '" + std::string(text) + "'");
  return mod(p);
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::ModP: return "Zp:" + std::to_string(p_);
  }
  return {};
}

Coefficient::Coefficient(Ring ring, long value) : ring_(ring), value_(value) { reduce(); }

Coefficient::Coefficient(Ring ring, const mpz_class& value) : ring_(ring), value_(value) { reduce(); }

Coefficient::Coefficient(Ring ring, const mpq_class& value) : ring_(ring), value_(value) {
  value_.canonicalize();
  reduce();
}

Coefficient Coefficient::parse(Ring ring, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParseError("bad coefficient '" + s + "'");
  q.canonicalize();
  return Coefficient(ring, q);
}

void Coefficient::reduce() {
  switch (ring_.kind()) {
    case RingKind::Rationals:
      return;
    case RingKind::Integers:
      if (value_.get_den() != 1)
        throw RingMismatch("non-integral value " + value_.get_str() + " in Z");
      return;
    case RingKind::ModP: {
      const mpz_class p(ring_.modulus());
      mpz_class num = value_.get_num() % p;
      if (num < 0) num += p;
      if (value_.get_den() != 1) {
        mpz_class den = value_.get_den() % p;
        if (den == 0) throw RingMismatch("denominator divisible by " + p.get_str());
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num = (num * inv) % p;
      }
      value_ = num;
      return;
    }
  }
}

void Coefficient::check_same_ring(const Coefficient& other) const {
  if (ring_ != other.ring_)
    throw RingMismatch("mixing coefficients over " + ring_.name() + " and " + other.ring_.name());
}

Coefficient Coefficient::in(Ring target) const {
  if (target == ring_) return *this;
  if (ring_.kind() == RingKind::ModP && target.kind() != RingKind::ModP)
    throw RingMismatch("cannot lift a residue mod " + std::to_string(ring_.modulus()) + " to " + target.name());
  return Coefficient(target, value_);
}

Coefficient Coefficient::operator-() const {
  Coefficient r(*this);
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  check_same_ring(other);
  value_ += other.value_;
  reduce();
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) {
  check_same_ring(other);
  value_ -= other.value_;
  reduce();
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  check_same_ring(other);
  value_ *= other.value_;
  reduce();
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& other) {
  check_same_ring(other);
  return *this *= other.inverse();
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  switch (ring_.kind()) {
    case RingKind::Integers:
      if (value_ == 1 || value_ == -1) return *this;
      throw NotAField("element " + value_.get_str() + " is not a unit in Z");
    case RingKind::Rationals:
      return Coefficient(ring_, mpq_class(1) / value_);
    case RingKind::ModP: {
      const mpz_class p(ring_.modulus());
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
      return Coefficient(ring_, inv);
    }
  }
  return *this;
}

std::string Coefficient::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

}  // namespace multichain::exactlin
