#include "multichain/ezaw/tensor.hpp"

namespace multichain::ezaw {

TensorChain tensor_product(const Chain& a, const Chain& b) {
  if (a.ring() != b.ring()) throw RingMismatch("tensoring chains over different rings");
  TensorChain out(a.ring());
  for (const auto& [x, u] : a.terms())
    for (const auto& [y, v] : b.terms()) out.add({x, y}, u * v);
  return out;
}

TensorChain tensor_boundary(const MSet& left, const MSet& right, const TensorChain& t, complexes::ChainMode mode) {
  TensorChain out(t.ring());
  for (const auto& [key, v] : t.terms()) {
    const auto& [a, b] = key;
    const Chain da_chain = complexes::boundary(left, a, t.ring(), mode);
    for (const auto& [da, u] : da_chain.terms()) out.add({da, b}, u * v);
    const Coefficient koszul = a.degree.total() % 2 == 0 ? v : -v;
    const Chain db_chain = complexes::boundary(right, b, t.ring(), mode);
    for (const auto& [db, u] : db_chain.terms()) out.add({a, db}, u * koszul);
  }
  return out;
}

TensorChain normalize(const MSet& left, const MSet& right, const TensorChain& t) {
  TensorChain out(t.ring());
  for (const auto& [key, v] : t.terms())
    if (!left.is_degenerate(key[0]) && !right.is_degenerate(key[1])) out.add(key, v);
  return out;
}

namespace {

template <std::size_t N>
std::string format(const std::array<const MSet*, N>& sets, const Tensor<N>& t) {
  if (t.is_zero()) return "0";
  std::string s;
  const Coefficient minus_one(t.ring(), -1);
  for (const auto& [key, v] : t.terms()) {
    const bool negative =
        !v.is_one() && (v == minus_one || (t.ring().kind() != exactlin::RingKind::ModP && sgn(v.value()) < 0));
    const Coefficient magnitude = negative ? -v : v;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (!magnitude.is_one()) s += magnitude.to_string() + "*";
    for (std::size_t f = 0; f < N; ++f) {
      if (f) s += "⊗";
      s += sets[f]->encode(key[f]);
    }
  }
  return s;
}

}  // namespace

std::string format_tensor(const MSet& left, const MSet& right, const TensorChain& t) {
  return format<2>({&left, &right}, t);
}

std::string format_tensor(const MSet& set, const Tensor<3>& t) { return format<3>({&set, &set, &set}, t); }

}  // namespace multichain::ezaw
