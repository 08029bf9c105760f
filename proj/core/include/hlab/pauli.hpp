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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlab/gate.hpp"

namespace hlab {

/**
 * PauliString: an element of the n-qubit Pauli group in symplectic form.
 * Qubit q carries X iff bit q of x_bits is set and Z iff bit q of z_bits
 * is set (both set means Y); qubit 0 is the leftmost letter and the most
 * significant tensor factor. The overall phase is i^phase_exp.
 */
struct PauliString {
  int n = 1;
  std::uint32_t x_bits = 0;
  std::uint32_t z_bits = 0;
  int phase_exp = 0;  // mod 4

  bool operator==(const PauliString&) const = default;

  bool x_at(int qubit) const { return (x_bits >> qubit) & 1u; }
  bool z_at(int qubit) const { return (z_bits >> qubit) & 1u; }
  bool is_identity_word() const { return x_bits == 0 && z_bits == 0; }
  char letter(int qubit) const;

  /// Text form "i^k" prefix plus letters, e.g. "-XZ", "i·YI".
  std::string to_string() const;
  static PauliString parse(const std::string& text);
  static PauliString from_letters(const std::string& letters, int phase_exp = 0);
  /// Single non-identity letter at `qubit`, identity elsewhere.
  static PauliString single(int n, int qubit, char letter);
};

/// All 4^n phase-free strings in I-X-Y-Z lexicographic order per qubit,
/// identity first. Guarded to 1 <= n <= 4.
std::vector<PauliString> enumerate_paulis(int n);

/// Symplectic product with the exact i^k phase bookkeeping.
PauliString pauli_mul(const PauliString& p, const PauliString& q);

/// Dense matrix of the string in the given ring (needs a >= 2 for i).
Gate to_gate(const PauliString& p, int order_log2 = CycEntry::kDefaultOrderLog2);

/**
 * Exact Pauli recognition by trace expansion: u is Pauli iff exactly one
 * string P has Tr(P u) != 0 and that trace is dim times a phase.
 * The phase splits as i^phase_exp (kept on the string) times a residual
 * zeta^residual_root_exp with 0 <= residual < 2^(a-2).
 */
struct PauliCheckResult {
  PauliString string;
  int residual_root_exp = 0;
};
std::optional<PauliCheckResult> pauli_check(const Gate& u);

/// u multiplied on the right by the string's matrix, using its
/// permutation structure instead of a general matmul.
Gate mul_gate_pauli(const Gate& u, const PauliString& p);

}  // namespace hlab
