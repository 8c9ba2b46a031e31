#pragma once

// Incremental complexity tracking for the depth-first enumerators. Each push
// either extends the state and returns true, or leaves it untouched and
// returns false because the filtration bound would be exceeded.

#include <cstdint>
#include <optional>
#include <vector>

namespace multichain::surjection {

// Sequences over {1..k}: per pair, the number of adjacent unequal entries of
// the restricted subsequence.
class ComplexityWalk {
 public:
  ComplexityWalk(int k, std::optional<int> d)
      : k_(k), d_(d), last_(static_cast<std::size_t>(k) + 1, -1),
        changes_(static_cast<std::size_t>((k + 1) * (k + 1)), 0) {}

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<std::int32_t>& sequence() const { return seq_; }

  bool push(std::int32_t v) {
    // The pair {v, w} gains a change exactly when w occurred after the last v.
    std::vector<int> bumped;
    for (int w = 1; w <= k_; ++w) {
      if (w == v || last_[static_cast<std::size_t>(w)] <= last_[static_cast<std::size_t>(v)]) continue;
      auto& c = changes_[index(v, w)];
      if (d_ && c + 1 > *d_) {
        for (int u : bumped) --changes_[index(v, u)];
        return false;
      }
      ++c;
      bumped.push_back(w);
    }
    history_.push_back({last_[static_cast<std::size_t>(v)], std::move(bumped)});
    last_[static_cast<std::size_t>(v)] = static_cast<int>(seq_.size());
    seq_.push_back(v);
    return true;
  }

  void pop() {
    const std::int32_t v = seq_.back();
    seq_.pop_back();
    auto& [previous, bumped] = history_.back();
    last_[static_cast<std::size_t>(v)] = previous;
    for (int w : bumped) --changes_[index(v, w)];
    history_.pop_back();
  }

 private:
  std::size_t index(int a, int b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a * (k_ + 1) + b);
  }

  struct Step {
    int previous_last;
    std::vector<int> bumped;
  };

  int k_;
  std::optional<int> d_;
  std::vector<int> last_;
  std::vector<int> changes_;
  std::vector<std::int32_t> seq_;
  std::vector<Step> history_;
};

// Tuples of permutations: per pair, the number of relative-order flips.
// The bound is on 1 + max flips.
class OrderWalk {
 public:
  OrderWalk(int k, std::optional<int> d)
      : k_(k), d_(d), flips_(static_cast<std::size_t>((k + 1) * (k + 1)), 0) {}

  int size() const { return static_cast<int>(positions_.size()); }

  bool push(const std::vector<std::int32_t>& perm) {
    std::vector<int> pos(static_cast<std::size_t>(k_) + 1);
    for (int p = 0; p < k_; ++p) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = p;
    std::vector<std::size_t> bumped;
    if (!positions_.empty()) {
      const auto& prev = positions_.back();
      for (int a = 1; a <= k_; ++a)
        for (int b = a + 1; b <= k_; ++b) {
          if ((prev[static_cast<std::size_t>(a)] < prev[static_cast<std::size_t>(b)]) ==
              (pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]))
            continue;
          auto& f = flips_[static_cast<std::size_t>(a * (k_ + 1) + b)];
          if (d_ && 1 + f + 1 > *d_) {
            for (auto i : bumped) --flips_[i];
            return false;
          }
          ++f;
          bumped.push_back(static_cast<std::size_t>(a * (k_ + 1) + b));
        }
    } else if (d_ && *d_ < 1) {
      return false;
    }
    positions_.push_back(std::move(pos));
    history_.push_back(std::move(bumped));
    return true;
  }

  void pop() {
    for (auto i : history_.back()) --flips_[i];
    history_.pop_back();
    positions_.pop_back();
  }

 private:
  int k_;
  std::optional<int> d_;
  std::vector<int> flips_;
  std::vector<std::vector<int>> positions_;
  std::vector<std::vector<std::size_t>> history_;
};

}  // namespace multichain::surjection
