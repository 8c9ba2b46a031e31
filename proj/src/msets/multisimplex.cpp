#include "multichain/msets/multisimplex.hpp"

#include <numeric>
#include <stdexcept>

namespace multichain::msets {

int MultiIndex::total() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

MultiIndex MultiIndex::with(int dir, int value) const {
  MultiIndex out(*this);
  out[dir] = value;
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (other.k() != k()) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex out(*this);
  for (int l = 0; l < k(); ++l) out[l] -= other[l];
  return out;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees_[i]);
  }
  return s + ")";
}

namespace {

void compositions(int k, int remaining, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == k - 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix.push_back(v);
    compositions(k, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_total(int k, int total) {
  std::vector<MultiIndex> out;
  if (k <= 0 || total < 0) return out;
  std::vector<int> prefix;
  compositions(k, total, prefix, out);
  return out;
}

std::vector<MultiIndex> multi_indices_below(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  std::vector<int> current(static_cast<std::size_t>(bound.k()), 0);
  for (;;) {
    out.emplace_back(current);
    int l = bound.k() - 1;
    while (l >= 0 && current[static_cast<std::size_t>(l)] == bound[l]) current[static_cast<std::size_t>(l--)] = 0;
    if (l < 0) break;
    ++current[static_cast<std::size_t>(l)];
  }
  return out;
}

}  // namespace multichain::msets
