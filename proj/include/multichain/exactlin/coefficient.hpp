#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace multichain::exactlin {

enum class RingKind { Integers, ModP, Rationals };

// The ground ring: Z, Z/p (p prime) or Q.
class Ring {
 public:
  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  // Throws ParseError when p is not prime.
  static Ring mod(std::uint32_t p);

  // Accepts "Z", "Q", "Zp:<p>" and the short form "Z<p>" (e.g. "Z2").
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint32_t modulus() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }

  // Z maps to Q, fields map to themselves.
  Ring fraction_field() const { return is_field() ? *this : rationals(); }

  // "Z", "Q" or "Zp:<p>".
  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  Ring(RingKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  RingKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

// An element of a Ring. Z/p residues live in [0, p); rationals are kept in
// lowest terms with positive denominator (mpq canonical form).
class Coefficient {
 public:
  explicit Coefficient(Ring ring) : ring_(ring), value_(0) {}
  Coefficient(Ring ring, long value);
  Coefficient(Ring ring, const mpz_class& value);
  // Non-integral values are only meaningful in Q and Z/p (via the inverse of
  // the denominator); throws RingMismatch over Z.
  Coefficient(Ring ring, const mpq_class& value);

  // Integers, "a/b" fractions; a trailing reduction happens per ring.
  static Coefficient parse(Ring ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  // The image of this value in another ring. Integral values map into any
  // ring; fractions need a field target.
  Coefficient in(Ring target) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);
  Coefficient& operator/=(const Coefficient& other);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  Coefficient inverse() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same_ring(const Coefficient& other) const;
  void reduce();

  Ring ring_;
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

}  // namespace multichain::exactlin
