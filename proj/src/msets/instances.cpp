#include "multichain/msets/instances.hpp"

#include <algorithm>
#include <numeric>

#include "multichain/error.hpp"

namespace multichain::msets {

// ---------------------------------------------------------------- standard

StandardMultisimplex::StandardMultisimplex(MultiIndex targets) : targets_(std::move(targets)) {
  if (targets_.k() < 1) throw IndexOutOfRange("standard multisimplex needs at least one direction");
  for (int l = 0; l < targets_.k(); ++l)
    if (targets_[l] < 0) throw IndexOutOfRange("standard multisimplex with negative target " + targets_.to_string());
}

std::string StandardMultisimplex::name() const { return "Delta" + targets_.to_string(); }

std::size_t StandardMultisimplex::offset(const Multisimplex& x, int dir) const {
  std::size_t off = 0;
  for (int m = 0; m < dir; ++m) off += static_cast<std::size_t>(x.degree[m] + 1);
  return off;
}

Multisimplex StandardMultisimplex::identity() const {
  Multisimplex x{{}, targets_};
  for (int l = 0; l < k(); ++l)
    for (int v = 0; v <= targets_[l]; ++v) x.payload.push_back(v);
  return x;
}

bool StandardMultisimplex::is_degenerate(const Multisimplex& x) const {
  check_degree_arity(x);
  for (int l = 0; l < k(); ++l) {
    const std::size_t off = offset(x, l);
    for (int i = 0; i < x.degree[l]; ++i)
      if (x.payload[off + static_cast<std::size_t>(i)] == x.payload[off + static_cast<std::size_t>(i) + 1]) return true;
  }
  return false;
}

bool StandardMultisimplex::contains(const Multisimplex& x) const {
  if (x.degree.k() != k()) return false;
  std::size_t expected = 0;
  for (int l = 0; l < k(); ++l) {
    if (x.degree[l] < 0) return false;
    expected += static_cast<std::size_t>(x.degree[l] + 1);
  }
  if (x.payload.size() != expected) return false;
  for (int l = 0; l < k(); ++l) {
    const std::size_t off = offset(x, l);
    for (int i = 0; i <= x.degree[l]; ++i) {
      const int v = x.payload[off + static_cast<std::size_t>(i)];
      if (v < 0 || v > targets_[l]) return false;
      if (i > 0 && v < x.payload[off + static_cast<std::size_t>(i) - 1]) return false;
    }
  }
  return true;
}

std::string StandardMultisimplex::encode(const Multisimplex& x) const {
  const bool digits = std::all_of(targets_.degrees().begin(), targets_.degrees().end(), [](int t) { return t <= 9; });
  std::string s;
  for (int l = 0; l < k(); ++l) {
    if (l) s += '|';
    const std::size_t off = offset(x, l);
    for (int i = 0; i <= x.degree[l]; ++i) {
      if (!digits && i) s += ',';
      s += std::to_string(x.payload[off + static_cast<std::size_t>(i)]);
    }
  }
  return s;
}

Multisimplex StandardMultisimplex::decode(std::string_view text) const {
  const bool digits = std::all_of(targets_.degrees().begin(), targets_.degrees().end(), [](int t) { return t <= 9; });
  Multisimplex x;
  std::vector<int> degrees;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = text.find('|', start);
    const std::string_view part = text.substr(start, bar == std::string_view::npos ? text.size() - start : bar - start);
    if (part.empty()) throw ParseError("empty vertex list in '" + std::string(text) + "'");
    int count = 0;
    if (digits) {
      for (char c : part) {
        if (c < '0' || c > '9') throw ParseError("bad vertex '" + std::string(1, c) + "'");
        x.payload.push_back(c - '0');
        ++count;
      }
    } else {
      std::size_t p = 0;
      while (p <= part.size()) {
        std::size_t comma = part.find(',', p);
        if (comma == std::string_view::npos) comma = part.size();
        x.payload.push_back(std::stoi(std::string(part.substr(p, comma - p))));
        ++count;
        p = comma + 1;
      }
    }
    degrees.push_back(count - 1);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  x.degree = MultiIndex(degrees);
  if (!contains(x)) throw ParseError("'" + std::string(text) + "' is not a multisimplex of " + name());
  return x;
}

Multisimplex StandardMultisimplex::do_face(const Multisimplex& x, int dir, int i) const {
  Multisimplex y = x;
  y.payload.erase(y.payload.begin() + static_cast<std::ptrdiff_t>(offset(x, dir) + static_cast<std::size_t>(i)));
  y.degree[dir] -= 1;
  return y;
}

Multisimplex StandardMultisimplex::do_degeneracy(const Multisimplex& x, int dir, int i) const {
  Multisimplex y = x;
  const auto pos = static_cast<std::ptrdiff_t>(offset(x, dir) + static_cast<std::size_t>(i));
  y.payload.insert(y.payload.begin() + pos, x.payload[static_cast<std::size_t>(pos)]);
  y.degree[dir] += 1;
  return y;
}

namespace {

// Non-decreasing sequences of the given length with values in [0, top].
void monotone_sequences(int length, int top, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  for (int v = prefix.empty() ? 0 : prefix.back(); v <= top; ++v) {
    prefix.push_back(v);
    monotone_sequences(length, top, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Multisimplex> StandardMultisimplex::generate(const MultiIndex& degree) const {
  std::vector<std::vector<std::vector<int>>> per_dir;
  for (int l = 0; l < k(); ++l) {
    std::vector<std::vector<int>> seqs;
    std::vector<int> prefix;
    monotone_sequences(degree[l] + 1, targets_[l], prefix, seqs);
    per_dir.push_back(std::move(seqs));
  }
  std::vector<Multisimplex> out;
  std::vector<std::size_t> choice(per_dir.size(), 0);
  if (std::any_of(per_dir.begin(), per_dir.end(), [](const auto& s) { return s.empty(); })) return out;
  for (;;) {
    Multisimplex x{{}, degree};
    for (std::size_t l = 0; l < per_dir.size(); ++l)
      x.payload.insert(x.payload.end(), per_dir[l][choice[l]].begin(), per_dir[l][choice[l]].end());
    out.push_back(std::move(x));
    std::size_t l = per_dir.size();
    while (l > 0 && ++choice[l - 1] == per_dir[l - 1].size()) choice[--l] = 0;
    if (l == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------- diagonal

Diagonal::Diagonal(MSetPtr base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("diagonal of a null set");
}

std::string Diagonal::name() const { return base_->name() + "^D"; }

Multisimplex Diagonal::to_base(const Multisimplex& x) const {
  if (x.degree.k() != 1) throw IndexOutOfRange(name() + ": diagonal simplices carry a single degree");
  return {x.payload, MultiIndex::constant(base_->k(), x.degree[0])};
}

Multisimplex Diagonal::from_base(const Multisimplex& x) const {
  const int n = x.degree.k() ? x.degree[0] : 0;
  for (int l = 0; l < x.degree.k(); ++l)
    if (x.degree[l] != n) throw MalformedDiagonal(base_->name() + ": " + x.degree.to_string() + " is off the diagonal");
  return {x.payload, MultiIndex{n}};
}

bool Diagonal::contains(const Multisimplex& x) const {
  return x.degree.k() == 1 && base_->contains(to_base(x));
}

std::string Diagonal::encode(const Multisimplex& x) const { return base_->encode(to_base(x)); }

Multisimplex Diagonal::decode(std::string_view text) const { return from_base(base_->decode(text)); }

Multisimplex Diagonal::do_face(const Multisimplex& x, int /*dir*/, int i) const {
  Multisimplex y = to_base(x);
  for (int l = 0; l < base_->k(); ++l) y = base_->face(y, l, i);
  return from_base(y);
}

Multisimplex Diagonal::do_degeneracy(const Multisimplex& x, int /*dir*/, int i) const {
  Multisimplex y = to_base(x);
  for (int l = 0; l < base_->k(); ++l) y = base_->degeneracy(y, l, i);
  return from_base(y);
}

Multisimplex Diagonal::do_front_face(const Multisimplex& x, const MultiIndex& to) const {
  return from_base(base_->front_face(to_base(x), MultiIndex::constant(base_->k(), to[0])));
}

Multisimplex Diagonal::do_back_face(const Multisimplex& x, const MultiIndex& to) const {
  return from_base(base_->back_face(to_base(x), MultiIndex::constant(base_->k(), to[0])));
}

std::vector<Multisimplex> Diagonal::generate(const MultiIndex& degree) const {
  std::vector<Multisimplex> out;
  for (const auto& x : base_->enumerate(MultiIndex::constant(base_->k(), degree[0]))) out.push_back(from_base(x));
  return out;
}

// ---------------------------------------------------------------- product

ExternalProduct::ExternalProduct(std::vector<MSetPtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("external product of no factors");
  for (const auto& f : factors_)
    if (!f || f->k() != 1) throw std::invalid_argument("external product factors must be simplicial (1-fold)");
}

std::string ExternalProduct::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x " : "") + factors_[i]->name();
  return s;
}

Multisimplex ExternalProduct::pack(const std::vector<Multisimplex>& parts) const {
  if (parts.size() != factors_.size()) throw IndexOutOfRange(name() + ": wrong number of factors");
  Multisimplex x;
  std::vector<int> degrees;
  for (const auto& p : parts) {
    if (p.degree.k() != 1) throw IndexOutOfRange(name() + ": factors must be simplices");
    x.payload.push_back(static_cast<std::int32_t>(p.payload.size()));
    x.payload.insert(x.payload.end(), p.payload.begin(), p.payload.end());
    degrees.push_back(p.degree[0]);
  }
  x.degree = MultiIndex(degrees);
  return x;
}

std::vector<Multisimplex> ExternalProduct::unpack(const Multisimplex& x) const {
  std::vector<Multisimplex> parts;
  std::size_t pos = 0;
  for (int l = 0; l < k(); ++l) {
    if (pos >= x.payload.size()) throw ParseError(name() + ": truncated product payload");
    const auto len = static_cast<std::size_t>(x.payload[pos++]);
    if (pos + len > x.payload.size()) throw ParseError(name() + ": truncated product payload");
    Multisimplex p{Payload(x.payload.begin() + static_cast<std::ptrdiff_t>(pos),
                           x.payload.begin() + static_cast<std::ptrdiff_t>(pos + len)),
                   MultiIndex{x.degree[l]}};
    parts.push_back(std::move(p));
    pos += len;
  }
  return parts;
}

bool ExternalProduct::is_degenerate(const Multisimplex& x) const {
  check_degree_arity(x);
  const auto parts = unpack(x);
  for (int l = 0; l < k(); ++l)
    if (factors_[static_cast<std::size_t>(l)]->is_degenerate(parts[static_cast<std::size_t>(l)])) return true;
  return false;
}

bool ExternalProduct::contains(const Multisimplex& x) const {
  if (x.degree.k() != k()) return false;
  try {
    const auto parts = unpack(x);
    for (int l = 0; l < k(); ++l)
      if (!factors_[static_cast<std::size_t>(l)]->contains(parts[static_cast<std::size_t>(l)])) return false;
    return pack(parts) == x;
  } catch (const Error&) {
    return false;
  }
}

std::string ExternalProduct::encode(const Multisimplex& x) const {
  const auto parts = unpack(x);
  std::string s = "(";
  for (int l = 0; l < k(); ++l) {
    if (l) s += ';';
    s += factors_[static_cast<std::size_t>(l)]->encode(parts[static_cast<std::size_t>(l)]);
  }
  return s + ")";
}

Multisimplex ExternalProduct::decode(std::string_view text) const {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("product simplex '" + std::string(text) + "' must look like (x;y;...)");
  const std::string_view inner = text.substr(1, text.size() - 2);
  std::vector<Multisimplex> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i < inner.size() && inner[i] == '(') ++depth;
    if (i < inner.size() && inner[i] == ')') --depth;
    if (i == inner.size() || (inner[i] == ';' && depth == 0)) {
      if (parts.size() >= factors_.size()) throw ParseError("too many factors in '" + std::string(text) + "'");
      parts.push_back(factors_[parts.size()]->decode(inner.substr(start, i - start)));
      start = i + 1;
    }
  }
  return pack(parts);
}

Multisimplex ExternalProduct::do_face(const Multisimplex& x, int dir, int i) const {
  auto parts = unpack(x);
  auto& p = parts[static_cast<std::size_t>(dir)];
  p = factors_[static_cast<std::size_t>(dir)]->face(p, 0, i);
  return pack(parts);
}

Multisimplex ExternalProduct::do_degeneracy(const Multisimplex& x, int dir, int i) const {
  auto parts = unpack(x);
  auto& p = parts[static_cast<std::size_t>(dir)];
  p = factors_[static_cast<std::size_t>(dir)]->degeneracy(p, 0, i);
  return pack(parts);
}

std::vector<Multisimplex> ExternalProduct::generate(const MultiIndex& degree) const {
  std::vector<const std::vector<Multisimplex>*> lists;
  for (int l = 0; l < k(); ++l)
    lists.push_back(&factors_[static_cast<std::size_t>(l)]->enumerate(MultiIndex{degree[l]}));
  std::vector<Multisimplex> out;
  if (std::any_of(lists.begin(), lists.end(), [](const auto* s) { return s->empty(); })) return out;
  std::vector<std::size_t> choice(lists.size(), 0);
  for (;;) {
    std::vector<Multisimplex> parts;
    for (std::size_t l = 0; l < lists.size(); ++l) parts.push_back((*lists[l])[choice[l]]);
    out.push_back(pack(parts));
    std::size_t l = lists.size();
    while (l > 0 && ++choice[l - 1] == lists[l - 1]->size()) choice[--l] = 0;
    if (l == 0) break;
  }
  return out;
}

}  // namespace multichain::msets
