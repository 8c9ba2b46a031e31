#include "multichain/complexes/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

#include "multichain/error.hpp"

namespace multichain::complexes {

Chain normalize(const MSet& set, const Chain& c) {
  Chain out(c.ring());
  for (const auto& [x, v] : c.terms())
    if (!set.is_degenerate(x)) out.add(x, v);
  return out;
}

namespace {

void add_boundary(const MSet& set, const Multisimplex& x, const Coefficient& coeff, Chain& out, ChainMode mode) {
  int prefix = 0;
  for (int l = 0; l < set.k(); ++l) {
    const int a = x.degree[l];
    if (a > 0) {
      for (int t = 0; t <= a; ++t) {
        Multisimplex y = set.face(x, l, t);
        if (mode == ChainMode::Normalized && set.is_degenerate(y)) continue;
        out.add(y, (t + prefix) % 2 == 0 ? coeff : -coeff);
      }
    }
    prefix += a;
  }
}

}  // namespace

Chain boundary(const MSet& set, const Chain& c, ChainMode mode) {
  Chain out(c.ring());
  for (const auto& [x, v] : c.terms()) {
    if (mode == ChainMode::Normalized && set.is_degenerate(x)) continue;
    add_boundary(set, x, v, out, mode);
  }
  return out;
}

Chain boundary(const MSet& set, const Multisimplex& x, const Ring& ring, ChainMode mode) {
  return boundary(set, Chain::of(ring, x), mode);
}

unsigned thread_budget() {
  if (const char* env = std::getenv("MULTICHAIN_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ComplexView::ComplexView(MSetPtr set, Ring ring, ChainMode mode, int cap)
    : set_(std::move(set)), ring_(ring), mode_(mode), cap_(cap) {
  if (!set_) throw std::invalid_argument("complex of a null set");
  if (cap < 0) throw CapTooLow("degree cap must be non-negative");
}

const ComplexView::Basis& ComplexView::basis_entry(int n) const {
  if (n > cap_)
    throw CapTooLow(set_->name() + ": degree " + std::to_string(n) + " above the cap " + std::to_string(cap_));
  {
    std::lock_guard lock(mutex_);
    if (auto it = bases_.find(n); it != bases_.end()) return *it->second;
  }
  auto b = std::make_shared<Basis>();
  if (n >= 0)
    for (const auto& degree : msets::multi_indices_of_total(set_->k(), n)) {
      const auto& xs =
          mode_ == ChainMode::Normalized ? set_->enumerate_nondegenerate(degree) : set_->enumerate(degree);
      b->elements.insert(b->elements.end(), xs.begin(), xs.end());
    }
  for (std::size_t i = 0; i < b->elements.size(); ++i) b->index.emplace(b->elements[i], i);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = bases_.emplace(n, std::move(b));
  return *it->second;
}

const std::vector<Multisimplex>& ComplexView::basis(int n) const { return basis_entry(n).elements; }

std::optional<std::size_t> ComplexView::index_of(int n, const Multisimplex& x) const {
  const auto& idx = basis_entry(n).index;
  auto it = idx.find(x);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

exactlin::SparseMatrix ComplexView::boundary_matrix(int n) const {
  const auto& target = basis_entry(n - 1);
  const auto& source = basis_entry(n);
  exactlin::SparseMatrix m(ring_, target.elements.size(), source.elements.size());
  for (std::size_t c = 0; c < source.elements.size(); ++c) {
    const Chain d = boundary(Chain::of(ring_, source.elements[c]));
    for (const auto& [y, v] : d.terms()) {
      auto it = target.index.find(y);
      if (it == target.index.end())
        throw std::logic_error(set_->name() + ": face " + set_->encode(y) + " missing from the basis");
      m.add(it->second, c, v);
    }
  }
  return m;
}

Cochain ComplexView::coboundary(const Cochain& alpha) const {
  if (alpha.ring() != ring_) throw RingMismatch("cochain over " + alpha.ring().name() + " in a " + ring_.name() + " complex");
  Cochain out(ring_, alpha.degree() + 1);
  for (const auto& x : basis(alpha.degree() + 1)) out.set(x, alpha.evaluate(boundary(Chain::of(ring_, x))));
  return out;
}

exactlin::SparseVector ComplexView::to_vector(const Chain& c, int n) const {
  exactlin::SparseVector v;
  const Chain projected = project(c);
  for (const auto& [x, coeff] : projected.terms()) {
    auto i = index_of(n, x);
    if (!i) throw IndexOutOfRange(set_->name() + ": " + set_->encode(x) + " is not a basis element in degree " + std::to_string(n));
    v.emplace(*i, coeff.in(ring_));
  }
  return v;
}

Chain ComplexView::to_chain(const exactlin::SparseVector& v, int n) const {
  const auto& b = basis(n);
  Chain c(ring_);
  for (const auto& [i, coeff] : v) c.add(b.at(i), coeff.in(ring_));
  return c;
}

exactlin::SparseVector ComplexView::to_vector(const Cochain& alpha) const {
  exactlin::SparseVector v;
  const auto& b = basis_entry(alpha.degree());
  for (const auto& [x, coeff] : alpha.values()) {
    auto it = b.index.find(x);
    if (it == b.index.end()) {
      if (mode_ == ChainMode::Normalized && set_->is_degenerate(x)) continue;
      throw IndexOutOfRange(set_->name() + ": " + set_->encode(x) + " is not a basis element");
    }
    v.emplace(it->second, coeff.in(ring_));
  }
  return v;
}

Cochain ComplexView::to_cochain(const exactlin::SparseVector& v, int n) const {
  const auto& b = basis(n);
  Cochain a(ring_, n);
  for (const auto& [i, coeff] : v) a.set(b.at(i), coeff.in(ring_));
  return a;
}

std::vector<exactlin::HomologySummary> ComplexView::homology(int lo, int hi) const {
  if (hi + 1 > cap_)
    throw CapTooLow("homology through degree " + std::to_string(hi) + " needs cap >= " + std::to_string(hi + 1));
  const int count = std::max(0, hi - lo + 1);
  std::vector<exactlin::HomologySummary> out(static_cast<std::size_t>(count));
  auto work = [&](int n) {
    out[static_cast<std::size_t>(n - lo)] =
        exactlin::homology_of_pair(boundary_matrix(n + 1), boundary_matrix(n), ring_, n);
  };
  const unsigned workers = std::min<unsigned>(thread_budget(), static_cast<unsigned>(std::max(count, 1)));
  if (workers <= 1) {
    for (int n = lo; n <= hi; ++n) work(n);
    return out;
  }
  // Each degree writes its own slot; results do not depend on scheduling.
  std::vector<std::future<void>> jobs;
  std::atomic<int> next{lo};
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&] {
      for (int n = next++; n <= hi; n = next++) work(n);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace multichain::complexes
