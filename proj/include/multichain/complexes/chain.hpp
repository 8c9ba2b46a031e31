#pragma once

#include <map>
#include <string>

#include "multichain/exactlin/coefficient.hpp"
#include "multichain/msets/mset.hpp"

namespace multichain::complexes {

using exactlin::Coefficient;
using exactlin::Ring;
using msets::MSet;
using msets::MultiIndex;
using msets::Multisimplex;

// A finite linear combination of multisimplices. Zero coefficients are never
// stored. Homogeneity is the caller's business; all library maps preserve it.
class Chain {
 public:
  using Terms = std::map<Multisimplex, Coefficient>;

  explicit Chain(Ring ring) : ring_(ring) {}
  static Chain of(Ring ring, const Multisimplex& x, long coeff = 1);

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const Multisimplex& x) const;

  // Adds c*x. Throws RingMismatch if c lives in another ring.
  void add(const Multisimplex& x, const Coefficient& c);
  void add(const Multisimplex& x, long c) { add(x, Coefficient(ring_, c)); }
  void add(const Chain& other, const Coefficient& c);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator-() const;
  Chain scaled(const Coefficient& c) const;
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }

  // Image in another ring; integral coefficients only when leaving a field.
  Chain over(Ring target) const;

  friend bool operator==(const Chain& a, const Chain& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

 private:
  Ring ring_;
  Terms terms_;
};

// A cochain of total degree n, stored by its nonzero values.
class Cochain {
 public:
  using Values = std::map<Multisimplex, Coefficient>;

  Cochain(Ring ring, int degree) : ring_(ring), degree_(degree) {}
  static Cochain indicator(Ring ring, const Multisimplex& x);

  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  const Values& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  Coefficient value(const Multisimplex& x) const;
  void set(const Multisimplex& x, const Coefficient& c);
  void add(const Multisimplex& x, const Coefficient& c);

  // Pairing with a chain; terms of other total degrees pair to zero.
  Coefficient evaluate(const Chain& c) const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain scaled(const Coefficient& c) const;
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.values_ == b.values_;
  }

 private:
  void check(const Coefficient& c) const;

  Ring ring_;
  int degree_;
  Values values_;
};

// "2321 - 1232 + 3*1221"; "0" for the zero chain.
std::string format_chain(const MSet& set, const Chain& c);

}  // namespace multichain::complexes
