#include "multichain/complexes/chain.hpp"

#include "multichain/error.hpp"

namespace multichain::complexes {

namespace {

void accumulate(std::map<Multisimplex, Coefficient>& terms, const Multisimplex& x, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

Chain Chain::of(Ring ring, const Multisimplex& x, long coeff) {
  Chain c(ring);
  c.add(x, coeff);
  return c;
}

Coefficient Chain::coefficient(const Multisimplex& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Coefficient(ring_) : it->second;
}

void Chain::add(const Multisimplex& x, const Coefficient& c) {
  if (c.ring() != ring_) throw RingMismatch("chain over " + ring_.name() + " given a coefficient in " + c.ring().name());
  accumulate(terms_, x, c);
}

void Chain::add(const Chain& other, const Coefficient& c) {
  if (other.ring_ != ring_) throw RingMismatch("adding chains over " + ring_.name() + " and " + other.ring_.name());
  for (const auto& [x, v] : other.terms_) add(x, v * c);
}

Chain& Chain::operator+=(const Chain& other) {
  add(other, Coefficient(ring_, 1));
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  add(other, Coefficient(ring_, -1));
  return *this;
}

Chain Chain::operator-() const { return scaled(Coefficient(ring_, -1)); }

Chain Chain::scaled(const Coefficient& c) const {
  Chain out(ring_);
  out.add(*this, c);
  return out;
}

Chain Chain::over(Ring target) const {
  Chain out(target);
  for (const auto& [x, v] : terms_) out.add(x, v.in(target));
  return out;
}

Cochain Cochain::indicator(Ring ring, const Multisimplex& x) {
  Cochain a(ring, x.degree.total());
  a.set(x, Coefficient(ring, 1));
  return a;
}

void Cochain::check(const Coefficient& c) const {
  if (c.ring() != ring_)
    throw RingMismatch("cochain over " + ring_.name() + " given a coefficient in " + c.ring().name());
}

Coefficient Cochain::value(const Multisimplex& x) const {
  auto it = values_.find(x);
  return it == values_.end() ? Coefficient(ring_) : it->second;
}

void Cochain::set(const Multisimplex& x, const Coefficient& c) {
  check(c);
  if (c.is_zero())
    values_.erase(x);
  else
    values_.insert_or_assign(x, c);
}

void Cochain::add(const Multisimplex& x, const Coefficient& c) {
  check(c);
  accumulate(values_, x, c);
}

Coefficient Cochain::evaluate(const Chain& c) const {
  if (c.ring() != ring_) throw RingMismatch("evaluating a " + ring_.name() + " cochain on a " + c.ring().name() + " chain");
  Coefficient sum(ring_);
  // Walk the smaller of the two supports.
  if (c.size() <= values_.size()) {
    for (const auto& [x, v] : c.terms())
      if (auto it = values_.find(x); it != values_.end()) sum += it->second * v;
  } else {
    for (const auto& [x, v] : values_)
      if (auto it = c.terms().find(x); it != c.terms().end()) sum += it->second * v;
  }
  return sum;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (other.ring_ != ring_ || other.degree_ != degree_)
    throw RingMismatch("adding cochains of different rings or degrees");
  for (const auto& [x, v] : other.values_) accumulate(values_, x, v);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  if (other.ring_ != ring_ || other.degree_ != degree_)
    throw RingMismatch("subtracting cochains of different rings or degrees");
  for (const auto& [x, v] : other.values_) accumulate(values_, x, -v);
  return *this;
}

Cochain Cochain::scaled(const Coefficient& c) const {
  check(c);
  Cochain out(ring_, degree_);
  for (const auto& [x, v] : values_) out.add(x, v * c);
  return out;
}

std::string format_chain(const MSet& set, const Chain& c) {
  if (c.is_zero()) return "0";
  std::string s;
  const Coefficient minus_one(c.ring(), -1);
  for (const auto& [x, v] : c.terms()) {
    const bool negative = !v.is_one() && (v == minus_one || (c.ring().kind() != exactlin::RingKind::ModP && sgn(v.value()) < 0));
    const Coefficient magnitude = negative ? -v : v;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (!magnitude.is_one()) s += magnitude.to_string() + "*";
    s += set.encode(x);
  }
  return s;
}

}  // namespace multichain::complexes
