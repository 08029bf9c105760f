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

#include <utility>

#include "hlab/hierarchy.hpp"

namespace hlab {

enum class Verdict {
  PassesNecessary,
  FailsOrder,
  FailsPauliPower,
  FailsBlockLevel,
};
std::string to_string(Verdict v);

/**
 * Structured outcome of the necessary-condition checks for controlled and
 * block-diagonal gates. All searches are bounded; a failing verdict means
 * "failed within the searched bounds" and is never a proof of
 * non-membership on its own (the order/Pauli-power obstructions, by
 * contrast, are genuine obstructions).
 */
struct ConditionReport {
  std::string mode;  // "controlled" or "direct_sum"
  std::optional<std::pair<Gate, Gate>> block_split;
  /// Projective order of the target gate (controlled mode) or of
  /// U1 * dagger(U2) (direct-sum mode).
  OrderResult order;
  bool order_is_pow2 = false;
  /// Least m >= 1 with the 2^m-th power projectively Pauli, if any.
  std::optional<int> m_found;
  std::optional<PauliString> pauli_power;
  /// Sign s with A = s B between the two independently computed power
  /// chains (direct-sum mode).
  std::optional<int> sign_relation;
  std::pair<LevelResult, LevelResult> block_levels;
  /// Least m with the 2^m-th power projectively identity, and whether the
  /// 2^(m-1)-th power is then a Pauli string (the strict power-chain
  /// refinement; see notes when it disagrees with the some-m form).
  std::optional<int> a2_least_identity_m;
  std::optional<bool> a2_predecessor_is_pauli;
  Verdict verdict = Verdict::PassesNecessary;
  std::string notes;
};

enum class CliffordTag {
  Pauli,
  HadamardLike,
  OrderFour,
  OddOrder,
  Unlisted,
  NotClifford,
};
std::string to_string(CliffordTag t);

/// Classification of a single-qubit Clifford gate against the
/// parametrized families sigma1 * exp(i pi sigma2 / 4) (Hadamard-like),
/// exp(i pi sigma / 4) (order four) and
/// sigma1 * exp(i pi sigma2 / 4) * exp(i pi sigma3 / 4) (odd order).
/// Every parametrization that hits the gate projectively is listed;
/// a Clifford matching no family is reported Unlisted, not forced.
struct CliffordClass {
  CliffordTag tag = CliffordTag::NotClifford;
  std::vector<std::string> matched_parametrizations;  // e.g. "ZY", "IXY"
};

struct AnalysisOptions {
  int m_max = 6;
  int cap = 5;
  int order_max = 128;
};

/// Present iff the off-diagonal half-blocks are exactly zero; returns the
/// two diagonal blocks (unitary whenever the input is).
std::optional<std::pair<Gate, Gate>> split_blocks(const Gate& u);

/// Necessary conditions for controlled(u): some 2^m power of u must be
/// Pauli and u itself must sit in the hierarchy within the cap.
ConditionReport check_controlled_conditions(const Gate& u, const AnalysisOptions& opt,
                                            LevelDecider& decider);

/// Necessary conditions for direct_sum(u1, u2), via R = u1 * dagger(u2):
/// some 2^m power of R must be Pauli and equal, up to a recorded sign, to
/// the independently computed power of u2 * dagger(u1); both blocks must
/// sit in the hierarchy within the cap.
ConditionReport check_dsum_conditions(const Gate& u1, const Gate& u2,
                                      const AnalysisOptions& opt,
                                      LevelDecider& decider);

/// The 24 projectively distinct single-qubit Clifford gates, produced by
/// closing {H, S} under multiplication with canonical-form dedup;
/// deterministic discovery order.
std::vector<Gate> enumerate_single_qubit_cliffords();

CliffordClass classify_single_qubit_clifford(const Gate& u);

struct ControlledLevelPrediction {
  /// level(u) + 1 when the necessary conditions pass and level(u) is
  /// decided. A conjecture, not a theorem; always measured independently.
  std::optional<int> prediction;
  LevelResult measured;
  ConditionReport conditions;
};
ControlledLevelPrediction predict_controlled_level(const Gate& u,
                                                   const AnalysisOptions& opt,
                                                   LevelDecider& decider);

}  // namespace hlab
