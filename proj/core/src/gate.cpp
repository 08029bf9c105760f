// Copyright 2025-2026 The hierarchy-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hlab/gate.hpp"

#include <algorithm>

namespace hlab {

namespace {

int common_order(const Gate& a, const Gate& b) {
  return std::max(a.ring_order_log2(), b.ring_order_log2());
}

}  // namespace

Gate::Gate(int n_qubits, std::vector<CycEntry> entries)
    : n_qubits_(n_qubits), dim_(1 << n_qubits), entries_(std::move(entries)) {
  if (n_qubits < 0 || n_qubits > 12) {
    throw std::invalid_argument("Gate: n_qubits out of range");
  }
  if (entries_.size() != std::size_t(dim_) * dim_) {
    throw std::invalid_argument("Gate: expected dim*dim entries");
  }
  ring_order_log2_ = entries_[0].order_log2();
  for (const auto& e : entries_) {
    if (e.order_log2() != ring_order_log2_) {
      throw ring_mismatch_error("Gate: all entries must share one ring order");
    }
  }
}

Gate Gate::unchecked(int n_qubits, std::vector<CycEntry> entries) {
  return Gate(n_qubits, std::move(entries));
}

Gate Gate::checked(int n_qubits, std::vector<CycEntry> entries) {
  Gate g(n_qubits, std::move(entries));
  if (!g.is_unitary()) {
    throw std::invalid_argument("Gate::checked: matrix is not exactly unitary");
  }
  return g;
}

Gate Gate::identity(int n_qubits, int order_log2) {
  const int d = 1 << n_qubits;
  std::vector<CycEntry> e(std::size_t(d) * d, CycEntry::zero(order_log2));
  for (int r = 0; r < d; ++r) {
    e[std::size_t(r) * d + r] = CycEntry::one(order_log2);
  }
  return Gate(n_qubits, std::move(e));
}

Gate Gate::lifted(int new_order_log2) const {
  if (new_order_log2 == ring_order_log2_) return *this;
  std::vector<CycEntry> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(x.lift(new_order_log2));
  return Gate(n_qubits_, std::move(e));
}

bool Gate::is_unitary() const {
  // U * dagger(U) == I, entry for entry in canonical form.
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      CycAccumulator acc(ring_order_log2_);
      for (int m = 0; m < dim_; ++m) {
        const CycEntry& x = entry(r, m);
        const CycEntry& y = entry(c, m);
        if (x.is_zero() || y.is_zero()) continue;
        acc.add_product(x, y.conj());
      }
      CycEntry v = acc.finish();
      if (r == c ? !v.is_one() : !v.is_zero()) return false;
    }
  }
  return true;
}

bool Gate::is_diagonal() const {
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (r != c && !entry(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.n_qubits_ != b.n_qubits_) return false;
  if (a.ring_order_log2_ != b.ring_order_log2_) {
    const int o = common_order(a, b);
    return a.lifted(o) == b.lifted(o);
  }
  return a.entries_ == b.entries_;
}

std::string Gate::serialize_key() const {
  std::string s;
  s.reserve(std::size_t(dim_) * dim_ * 8);
  s += 'a';
  s += std::to_string(ring_order_log2_);
  s += 'd';
  s += std::to_string(dim_);
  for (const auto& e : entries_) {
    s += '|';
    e.append_key(s);
  }
  return s;
}

Gate matmul(const Gate& a0, const Gate& b0) {
  if (a0.dim() != b0.dim()) {
    throw dimension_error("matmul: dimension mismatch");
  }
  const int o = common_order(a0, b0);
  const Gate a = a0.lifted(o);
  const Gate b = b0.lifted(o);
  const int d = a.dim();
  // Rows of gate matrices are often mostly zero (permutation-phase
  // structure); index the nonzero columns once instead of re-scanning.
  auto row_nnz = std::vector<std::vector<int>>(std::size_t(d));
  for (int r = 0; r < d; ++r) {
    for (int m = 0; m < d; ++m) {
      if (!a.entry(r, m).is_zero()) row_nnz[std::size_t(r)].push_back(m);
    }
  }
  std::vector<CycEntry> out;
  out.reserve(std::size_t(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      CycAccumulator acc(o);
      for (const int m : row_nnz[std::size_t(r)]) {
        const CycEntry& y = b.entry(m, c);
        if (y.is_zero()) continue;
        acc.add_product(a.entry(r, m), y);
      }
      out.push_back(acc.finish());
    }
  }
  return Gate::unchecked(a.n_qubits(), std::move(out));
}

Gate dagger(const Gate& a) {
  const int d = a.dim();
  std::vector<CycEntry> out;
  out.reserve(std::size_t(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      out.push_back(a.entry(c, r).conj());
    }
  }
  return Gate::unchecked(a.n_qubits(), std::move(out));
}

Gate power(const Gate& a, long long t) {
  if (t < 0) throw std::invalid_argument("power: exponent must be >= 0");
  Gate result = Gate::identity(a.n_qubits(), a.ring_order_log2());
  Gate base = a;
  while (t > 0) {
    if (t & 1) result = matmul(result, base);
    t >>= 1;
    if (t > 0) base = matmul(base, base);
  }
  return result;
}

Gate tensor(const Gate& a0, const Gate& b0) {
  const int o = common_order(a0, b0);
  const Gate a = a0.lifted(o);
  const Gate b = b0.lifted(o);
  const int da = a.dim(), db = b.dim();
  const int d = da * db;
  std::vector<CycEntry> out(std::size_t(d) * d, CycEntry::zero(o));
  for (int r1 = 0; r1 < da; ++r1) {
    for (int c1 = 0; c1 < da; ++c1) {
      const CycEntry& x = a.entry(r1, c1);
      if (x.is_zero()) continue;
      for (int r2 = 0; r2 < db; ++r2) {
        for (int c2 = 0; c2 < db; ++c2) {
          const CycEntry& y = b.entry(r2, c2);
          if (y.is_zero()) continue;
          out[std::size_t(r1 * db + r2) * d + (c1 * db + c2)] = x * y;
        }
      }
    }
  }
  return Gate::unchecked(a.n_qubits() + b.n_qubits(), std::move(out));
}

Gate direct_sum(const Gate& u1, const Gate& u2) {
  if (u1.dim() != u2.dim()) {
    throw dimension_error("direct_sum: blocks must have equal dimension");
  }
  const int o = common_order(u1, u2);
  const Gate a = u1.lifted(o);
  const Gate b = u2.lifted(o);
  const int half = a.dim();
  const int d = 2 * half;
  std::vector<CycEntry> out(std::size_t(d) * d, CycEntry::zero(o));
  for (int r = 0; r < half; ++r) {
    for (int c = 0; c < half; ++c) {
      out[std::size_t(r) * d + c] = a.entry(r, c);
      out[std::size_t(r + half) * d + (c + half)] = b.entry(r, c);
    }
  }
  return Gate::unchecked(a.n_qubits() + 1, std::move(out));
}

Gate controlled(const Gate& u) {
  return direct_sum(Gate::identity(u.n_qubits(), u.ring_order_log2()), u);
}

Gate scale(const CycEntry& s, const Gate& a0) {
  const int o = std::max(s.order_log2(), a0.ring_order_log2());
  const Gate a = a0.lifted(o);
  const CycEntry f = s.lift(o);
  std::vector<CycEntry> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(f * e);
  return Gate::unchecked(a.n_qubits(), std::move(out));
}

namespace {

// Index of the first nonzero entry in row-major order, or -1.
int first_nonzero(const Gate& g) {
  const auto& e = g.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i].is_zero()) return int(i);
  }
  return -1;
}

}  // namespace

bool projective_equal(const Gate& a0, const Gate& b0) {
  if (a0.dim() != b0.dim()) {
    throw dimension_error("projective_equal: dimension mismatch");
  }
  const int o = common_order(a0, b0);
  const Gate a = a0.lifted(o);
  const Gate b = b0.lifted(o);
  const int anchor_a = first_nonzero(a);
  const int anchor_b = first_nonzero(b);
  if (anchor_a != anchor_b) return false;
  if (anchor_a < 0) return true;  // both zero; unreachable for unitaries
  // A global phase cannot move zeros, so one anchor entry pins the only
  // candidate power of zeta.
  const int phases = 1 << o;
  const CycEntry& ea = a.entries()[std::size_t(anchor_a)];
  const CycEntry& eb = b.entries()[std::size_t(anchor_b)];
  int candidate = -1;
  for (int j = 0; j < phases; ++j) {
    if (ea == eb.times_root(j)) {
      candidate = j;
      break;
    }
  }
  if (candidate < 0) return false;
  const auto& av = a.entries();
  const auto& bv = b.entries();
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (av[i] != bv[i].times_root(candidate)) return false;
  }
  return true;
}

namespace {

// Serialized-entry-list order between two phase multiples of g, compared
// lazily. Zero entries serialize identically under every phase, so the
// first differing token sits at a nonzero entry.
bool rotated_less(const Gate& g, int j1, int j2) {
  std::string t1, t2;
  for (const auto& e : g.entries()) {
    if (e.is_zero()) continue;
    t1.clear();
    t2.clear();
    e.times_root(j1).append_key(t1);
    t1 += '|';
    e.times_root(j2).append_key(t2);
    t2 += '|';
    if (t1 != t2) return t1 < t2;
  }
  return false;
}

}  // namespace

Gate canonical_form(const Gate& a) {
  const int phases = 1 << a.ring_order_log2();
  int best = 0;
  for (int j = 1; j < phases; ++j) {
    if (rotated_less(a, j, best)) best = j;
  }
  if (best == 0) return a;
  std::vector<CycEntry> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(e.times_root(best));
  return Gate::unchecked(a.n_qubits(), std::move(out));
}

std::string canonical_key(const Gate& a) {
  return canonical_form(a).serialize_key();
}

OrderResult order_projective(const Gate& u, int order_max) {
  if (order_max < 1) {
    throw std::invalid_argument("order_projective: order_max must be >= 1");
  }
  const Gate id = Gate::identity(u.n_qubits(), u.ring_order_log2());
  Gate acc = u;
  for (int t = 1; t <= order_max; ++t) {
    if (projective_equal(acc, id)) {
      return OrderResult{t, order_max};
    }
    acc = matmul(acc, u);
  }
  return OrderResult{std::nullopt, order_max};
}

namespace gates {

namespace {

CycEntry c0(int a) { return CycEntry::zero(a); }
CycEntry c1(int a) { return CycEntry::one(a); }
CycEntry cm1(int a) { return -CycEntry::one(a); }
CycEntry ci(int a) { return CycEntry::root_power(1 << (a - 2), a); }
CycEntry cmi(int a) { return -ci(a); }

}  // namespace

Gate I(int a) { return Gate::identity(1, a); }

Gate X(int a) {
  return Gate::checked(1, {c0(a), c1(a), c1(a), c0(a)});
}

Gate Y(int a) {
  return Gate::checked(1, {c0(a), cmi(a), ci(a), c0(a)});
}

Gate Z(int a) {
  return Gate::checked(1, {c1(a), c0(a), c0(a), cm1(a)});
}

Gate H(int a) {
  // 1/sqrt(2) = (zeta - zeta^3)/2 requires a >= 3.
  const int o = std::max(a, 3);
  const CycEntry s =
      (CycEntry::root_power(1 << (o - 3), o) - CycEntry::root_power(3 << (o - 3), o))
          .div_pow2(1);
  return Gate::checked(1, {s, s, s, -s});
}

Gate S(int a) {
  return Gate::checked(1, {c1(a), c0(a), c0(a), ci(a)});
}

Gate T(int a) {
  const int o = std::max(a, 3);
  return Gate::checked(1, {c1(o), c0(o), c0(o), CycEntry::root_power(1 << (o - 3), o)});
}

Gate CX(int a) { return controlled(X(a)); }

Gate CZ(int a) { return controlled(Z(a)); }

Gate SWAP(int a) {
  std::vector<CycEntry> e(16, c0(a));
  e[0] = c1(a);
  e[6] = c1(a);
  e[9] = c1(a);
  e[15] = c1(a);
  return Gate::checked(2, std::move(e));
}

Gate rot(char axis, int k, int a) {
  if (k < 1) throw std::invalid_argument("rot: k must be >= 1");
  if (k + 1 > CycEntry::kMaxOrderLog2) {
    throw std::invalid_argument("rot: k too large for the supported ring orders");
  }
  Gate p = [&]() {
    switch (axis) {
      case 'X': return X(a);
      case 'Y': return Y(a);
      case 'Z': return Z(a);
      default:
        throw std::invalid_argument("rot: axis must be one of X, Y, Z");
    }
  }();
  // exp(i*pi*P/2^k) = cos(pi/2^k) I + i sin(pi/2^k) P, with both scalars
  // exact: w = zeta^(2^(a-1-k)) has w + conj(w) = 2cos and w - conj(w) = 2i sin.
  const int o = std::max(a, k + 1);
  p = p.lifted(o);
  const CycEntry w = CycEntry::root_power(1 << (o - 1 - k), o);
  const CycEntry cos_half = (w + w.conj()).div_pow2(1);
  const CycEntry isin_half = (w - w.conj()).div_pow2(1);
  const Gate id = Gate::identity(1, o);
  std::vector<CycEntry> e;
  e.reserve(4);
  for (int i = 0; i < 4; ++i) {
    e.push_back(cos_half * id.entries()[std::size_t(i)] +
                isin_half * p.entries()[std::size_t(i)]);
  }
  return Gate::checked(1, std::move(e));
}

}  // namespace gates

WordSample random_gate_word(int n_qubits, int depth, std::mt19937_64& rng,
                            int order_log2) {
  if (n_qubits < 1) {
    throw std::invalid_argument("random_gate_word: need at least one qubit");
  }
  if (depth < 1) {
    throw std::invalid_argument("random_gate_word: depth must be >= 1");
  }
  Gate acc = Gate::identity(n_qubits, std::max(order_log2, 3));
  std::string word;
  auto embed_single = [&](const Gate& g, int wire) {
    Gate full = wire == 0 ? g : Gate::identity(wire, g.ring_order_log2());
    if (wire > 0) full = tensor(full, g);
    const int rest = n_qubits - wire - 1;
    if (rest > 0) full = tensor(full, Gate::identity(rest, g.ring_order_log2()));
    return full;
  };
  auto embed_pair = [&](const Gate& g, int wire) {
    // Acts on (wire, wire+1); adjacent placement keeps the sampler simple.
    Gate full = wire == 0 ? g : tensor(Gate::identity(wire, g.ring_order_log2()), g);
    const int rest = n_qubits - wire - 2;
    if (rest > 0) full = tensor(full, Gate::identity(rest, g.ring_order_log2()));
    return full;
  };
  for (int step = 0; step < depth; ++step) {
    const int kinds = n_qubits >= 2 ? 5 : 3;
    const int pick = int(rng() % std::uint64_t(kinds));
    Gate factor = Gate::identity(n_qubits, acc.ring_order_log2());
    switch (pick) {
      case 0: {
        const int w = int(rng() % std::uint64_t(n_qubits));
        factor = embed_single(gates::H(order_log2), w);
        word += "H" + std::to_string(w);
        break;
      }
      case 1: {
        const int w = int(rng() % std::uint64_t(n_qubits));
        factor = embed_single(gates::S(order_log2), w);
        word += "S" + std::to_string(w);
        break;
      }
      case 2: {
        const int w = int(rng() % std::uint64_t(n_qubits));
        factor = embed_single(gates::T(order_log2), w);
        word += "T" + std::to_string(w);
        break;
      }
      case 3: {
        const int w = int(rng() % std::uint64_t(n_qubits - 1));
        factor = embed_pair(gates::CX(order_log2), w);
        word += "C" + std::to_string(w);
        break;
      }
      default: {
        const int w = int(rng() % std::uint64_t(n_qubits - 1));
        factor = embed_pair(gates::SWAP(order_log2), w);
        word += "W" + std::to_string(w);
        break;
      }
    }
    acc = matmul(acc, factor);
  }
  return WordSample{std::move(acc), std::move(word)};
}

}  // namespace hlab
