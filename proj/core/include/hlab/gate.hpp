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

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hlab/cyclotomic.hpp"

namespace hlab {

/**
 * Gate: an exact unitary matrix over n qubits with entries in one
 * cyclotomic ring. Gates are immutable values; operations are pure and
 * lift mixed-ring operands to the larger ring automatically.
 *
 * `checked` verifies exact unitarity (U * dagger(U) == identity in
 * canonical form). The unchecked constructor exists for internal
 * intermediates produced by unitarity-preserving operations.
 */
class Gate {
 public:
  static Gate checked(int n_qubits, std::vector<CycEntry> entries);
  static Gate unchecked(int n_qubits, std::vector<CycEntry> entries);
  static Gate identity(int n_qubits, int order_log2 = CycEntry::kDefaultOrderLog2);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return dim_; }
  int ring_order_log2() const { return ring_order_log2_; }
  const CycEntry& entry(int row, int col) const {
    return entries_[std::size_t(row) * dim_ + col];
  }
  const std::vector<CycEntry>& entries() const { return entries_; }

  Gate lifted(int new_order_log2) const;
  bool is_unitary() const;
  bool is_diagonal() const;

  /// Exact value equality; operands are lifted to a common ring.
  friend bool operator==(const Gate& a, const Gate& b);
  friend bool operator!=(const Gate& a, const Gate& b) { return !(a == b); }

  /// Deterministic compact serialization of the entry list.
  std::string serialize_key() const;

 private:
  Gate(int n_qubits, std::vector<CycEntry> entries);

  int n_qubits_;
  int dim_;
  int ring_order_log2_;
  std::vector<CycEntry> entries_;
};

Gate matmul(const Gate& a, const Gate& b);
Gate dagger(const Gate& a);
/// a^t for t >= 0 by repeated squaring; power(a, 0) is the identity.
Gate power(const Gate& a, long long t);
/// Kronecker product; the left factor acts on the more significant qubits.
Gate tensor(const Gate& a, const Gate& b);
/// Block-diagonal gate on one more qubit: top-left u1, bottom-right u2.
Gate direct_sum(const Gate& u1, const Gate& u2);
/// controlled(u) == direct_sum(identity, u); control qubit prepended on the
/// left, on-state |1>.
Gate controlled(const Gate& u);
/// Entry-wise scalar multiple. Unitarity is preserved only for unimodular
/// scalars; no check is performed.
Gate scale(const CycEntry& s, const Gate& a);

/// True iff a == zeta^j * b for some j; the phase group is the 2^a-th roots
/// of unity of the common ring.
bool projective_equal(const Gate& a, const Gate& b);
/// Among the 2^a phase multiples of a, the one with the lexicographically
/// least serialized entry list. projective_equal(a, b) iff
/// canonical_form(a) == canonical_form(b).
Gate canonical_form(const Gate& a);
/// serialize_key of the canonical form; the memoization key used by the
/// level decision procedure.
std::string canonical_key(const Gate& a);

struct OrderResult {
  std::optional<int> value;  // least t >= 1 with u^t projectively identity
  int searched_up_to = 0;
  bool value_is_pow2() const {
    return value.has_value() && (*value & (*value - 1)) == 0;
  }
};

/// Least t <= order_max with u^t projectively equal to the identity, by one
/// multiplication per step.
OrderResult order_projective(const Gate& u, int order_max);

/// Standard gate constructors. All are exact; `rot(axis, k)` builds
/// exp(i*pi*P/2^k) and selects ring order a = k+1 when the requested ring
/// is too small to hold it.
namespace gates {
Gate I(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate X(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate Y(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate Z(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate H(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate S(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate T(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate CX(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate CZ(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate SWAP(int order_log2 = CycEntry::kDefaultOrderLog2);
Gate rot(char axis, int k, int order_log2 = CycEntry::kDefaultOrderLog2);
}  // namespace gates

/**
 * Seeded random unitary: a product of {H, S, T} words for one qubit, plus
 * {CNOT, SWAP} on random wire pairs for more. Stays inside the default
 * ring; fully reproducible from the generator state. The word string names
 * the factors for failure reports.
 */
struct WordSample {
  Gate gate;
  std::string word;
};
WordSample random_gate_word(int n_qubits, int depth, std::mt19937_64& rng,
                            int order_log2 = CycEntry::kDefaultOrderLog2);

}  // namespace hlab
