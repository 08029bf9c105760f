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

#include "hlab/pauli.hpp"

#include <bit>

namespace hlab {

namespace {

constexpr int kMaxEnumerateQubits = 4;

// Index-space bitmask for the X part: qubit 0 is the most significant
// index bit.
std::uint32_t index_mask(const PauliString& p, bool x_part) {
  std::uint32_t m = 0;
  for (int q = 0; q < p.n; ++q) {
    const bool set = x_part ? p.x_at(q) : p.z_at(q);
    if (set) m |= 1u << (p.n - 1 - q);
  }
  return m;
}

// The nonzero entry in row r sits at column r ^ xm and equals i^t(r).
int row_phase_exp(const PauliString& p, std::uint32_t xm, std::uint32_t zm,
                  std::uint32_t row) {
  int t = p.phase_exp;
  std::uint32_t y = xm & zm;
  std::uint32_t z_only = zm & ~xm;
  t += 3 * int(std::popcount(y));
  t += 2 * int(std::popcount(y & row));
  t += 2 * int(std::popcount(z_only & row));
  return t & 3;
}

}  // namespace

char PauliString::letter(int qubit) const {
  const bool x = x_at(qubit), z = z_at(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  static const char* prefix[4] = {"", "i\xC2\xB7", "-", "-i\xC2\xB7"};
  std::string s = prefix[phase_exp & 3];
  for (int q = 0; q < n; ++q) s += letter(q);
  return s;
}

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && text[pos] == '-') {
    phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
    // optional separator: "·" (UTF-8) or ASCII '*'
    if (pos + 1 < text.size() && std::uint8_t(text[pos]) == 0xC2 &&
        std::uint8_t(text[pos + 1]) == 0xB7) {
      pos += 2;
    } else if (pos < text.size() && text[pos] == '*') {
      ++pos;
    }
  }
  return from_letters(text.substr(pos), phase);
}

PauliString PauliString::from_letters(const std::string& letters, int phase_exp) {
  if (letters.empty()) {
    throw std::invalid_argument("PauliString: empty letter sequence");
  }
  PauliString p;
  p.n = int(letters.size());
  p.phase_exp = ((phase_exp % 4) + 4) % 4;
  for (int q = 0; q < p.n; ++q) {
    switch (letters[std::size_t(q)]) {
      case 'I': break;
      case 'X': p.x_bits |= 1u << q; break;
      case 'Y': p.x_bits |= 1u << q; p.z_bits |= 1u << q; break;
      case 'Z': p.z_bits |= 1u << q; break;
      default:
        throw std::invalid_argument("PauliString: invalid letter '" +
                                    std::string(1, letters[std::size_t(q)]) + "'");
    }
  }
  return p;
}

PauliString PauliString::single(int n, int qubit, char letter) {
  std::string s(std::size_t(n), 'I');
  s[std::size_t(qubit)] = letter;
  return from_letters(s);
}

std::vector<PauliString> enumerate_paulis(int n) {
  if (n < 1 || n > kMaxEnumerateQubits) {
    throw std::invalid_argument("enumerate_paulis: n must satisfy 1 <= n <= 4");
  }
  static const char kOrder[4] = {'I', 'X', 'Y', 'Z'};
  std::vector<PauliString> out;
  const std::size_t total = std::size_t(1) << (2 * n);
  out.reserve(total);
  for (std::size_t m = 0; m < total; ++m) {
    std::string letters(std::size_t(n), 'I');
    for (int q = 0; q < n; ++q) {
      letters[std::size_t(q)] = kOrder[(m >> (2 * (n - 1 - q))) & 3];
    }
    out.push_back(PauliString::from_letters(letters));
  }
  return out;
}

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) {
    throw dimension_error("pauli_mul: strings act on different qubit counts");
  }
  PauliString r;
  r.n = p.n;
  r.x_bits = p.x_bits ^ q.x_bits;
  r.z_bits = p.z_bits ^ q.z_bits;
  int t = p.phase_exp + q.phase_exp;
  for (int j = 0; j < p.n; ++j) {
    const int x1 = p.x_at(j), z1 = p.z_at(j);
    const int x2 = q.x_at(j), z2 = q.z_at(j);
    const int x3 = x1 ^ x2, z3 = z1 ^ z2;
    // sigma(x,z) = i^(x z) X^x Z^z; commuting X^x2 past Z^z1 costs (-1)^(z1 x2).
    t += x1 * z1 + x2 * z2 + 2 * z1 * x2 - x3 * z3;
  }
  r.phase_exp = ((t % 4) + 4) % 4;
  return r;
}

Gate to_gate(const PauliString& p, int order_log2) {
  const int a = order_log2;
  const int d = 1 << p.n;
  const std::uint32_t xm = index_mask(p, true);
  const std::uint32_t zm = index_mask(p, false);
  std::vector<CycEntry> e(std::size_t(d) * d, CycEntry::zero(a));
  for (std::uint32_t r = 0; r < std::uint32_t(d); ++r) {
    const int t = row_phase_exp(p, xm, zm, r);
    e[std::size_t(r) * d + (r ^ xm)] = CycEntry::root_power(t << (a - 2), a);
  }
  return Gate::unchecked(p.n, std::move(e));
}

Gate mul_gate_pauli(const Gate& u, const PauliString& p) {
  if (u.n_qubits() != p.n) {
    throw dimension_error("mul_gate_pauli: qubit count mismatch");
  }
  const int a = u.ring_order_log2();
  const int d = u.dim();
  const std::uint32_t xm = index_mask(p, true);
  const std::uint32_t zm = index_mask(p, false);
  std::vector<CycEntry> out;
  out.reserve(std::size_t(d) * d);
  for (int r = 0; r < d; ++r) {
    for (std::uint32_t c = 0; c < std::uint32_t(d); ++c) {
      const std::uint32_t m = c ^ xm;
      const int t = row_phase_exp(p, xm, zm, m);
      out.push_back(u.entry(r, int(m)).times_root(static_cast<long long>(t) << (a - 2)));
    }
  }
  return Gate::unchecked(u.n_qubits(), std::move(out));
}

std::optional<PauliCheckResult> pauli_check(const Gate& u) {
  const int n = u.n_qubits();
  if (n < 1) {
    throw std::invalid_argument("pauli_check: gate must act on at least one qubit");
  }
  if (n > kMaxEnumerateQubits) {
    throw resource_limit_error("pauli_check: qubit count exceeds the desk-scale guard");
  }
  const int a = u.ring_order_log2();
  const int d = u.dim();
  std::optional<PauliString> hit;
  CycEntry hit_trace = CycEntry::zero(a);
  for (const PauliString& p : enumerate_paulis(n)) {
    // Tr(P u) via the permutation structure of P: one term per row.
    const std::uint32_t xm = index_mask(p, true);
    const std::uint32_t zm = index_mask(p, false);
    CycAccumulator acc(a);
    for (std::uint32_t r = 0; r < std::uint32_t(d); ++r) {
      const CycEntry& x = u.entry(int(r ^ xm), int(r));
      if (x.is_zero()) continue;
      const int t = row_phase_exp(p, xm, zm, r);
      acc.add(x.times_root(static_cast<long long>(t) << (a - 2)));
    }
    CycEntry tr = acc.finish();
    if (tr.is_zero()) continue;
    if (hit.has_value()) return std::nullopt;  // two nonzero overlaps
    hit = p;
    hit_trace = std::move(tr);
  }
  if (!hit.has_value()) return std::nullopt;
  // u = (Tr(P u)/dim) P exactly, because the phase-free strings form an
  // orthogonal basis; u is Pauli iff that scalar is a ring phase.
  const CycEntry c = hit_trace.div_pow2(n);
  const auto root = c.as_root_power();
  if (!root.has_value()) return std::nullopt;
  const int m = *root;
  PauliCheckResult res;
  res.string = *hit;
  res.string.phase_exp = m >> (a - 2);
  res.residual_root_exp = m & ((1 << (a - 2)) - 1);
  return res;
}

}  // namespace hlab
