#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace multichain::msets {

// Multidegree (a_1, ..., a_k) of a multisimplex. Directions are indexed from
// zero throughout the library.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> degrees) : degrees_(degrees) {}
  explicit MultiIndex(std::vector<int> degrees) : degrees_(std::move(degrees)) {}

  // (n, ..., n) with k entries.
  static MultiIndex constant(int k, int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(k), n)); }

  int k() const { return static_cast<int>(degrees_.size()); }
  int total() const;
  int operator[](int dir) const { return degrees_[static_cast<std::size_t>(dir)]; }
  int& operator[](int dir) { return degrees_[static_cast<std::size_t>(dir)]; }
  const std::vector<int>& degrees() const { return degrees_; }

  MultiIndex with(int dir, int value) const;
  MultiIndex operator-(const MultiIndex& other) const;

  // "(a_1,...,a_k)"
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> degrees_;
};

// All multi-indices with k entries summing to `total`, in lexicographic order.
std::vector<MultiIndex> multi_indices_of_total(int k, int total);

// All multi-indices i with 0 <= i <= bound entrywise, in lexicographic order.
std::vector<MultiIndex> multi_indices_below(const MultiIndex& bound);

using Payload = std::vector<std::int32_t>;

// A generator of a multisimplicial set: an instance-specific payload plus
// its multidegree. Ordered by payload, then degree.
struct Multisimplex {
  Payload payload;
  MultiIndex degree;

  friend auto operator<=>(const Multisimplex&, const Multisimplex&) = default;
};

}  // namespace multichain::msets
