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

#include <mutex>
#include <span>
#include <unordered_map>

#include "hlab/pauli.hpp"

namespace hlab {

/// Outcome of a bounded level search. `level` absent means "not decided
/// within the searched cap", never "not a member".
struct LevelResult {
  std::optional<int> level;
  int searched_cap = 0;
  bool decided() const { return level.has_value(); }
};

/// Conjugation images of the 2n generators X_i, Z_i; present only when all
/// images are Pauli strings.
struct CliffordTableau {
  int n = 0;
  std::vector<PauliString> x_images;
  std::vector<PauliString> z_images;
  /// Images preserve the commutation relations of the generators.
  bool symplectic_ok() const;
};

/// Bounded-search guards for the level recursion. Exceeding a guard throws
/// resource_limit_error, which is deliberately distinct from a negative
/// answer.
struct ResourceLimits {
  int max_qubits = 3;      // gates wider than this refuse the k >= 3 recursion
  int max_cap = 6;         // largest level the recursion will consider
  std::size_t memo_entries = std::size_t(1) << 20;
};

/// Exact U P U-dagger.
Gate conjugate(const Gate& u, const PauliString& p);

/// Present iff u maps every generator to a Pauli string under conjugation.
/// Level 1 is a group, so generator images decide level 2; this shortcut
/// is NOT valid at higher levels, which are not closed under products.
std::optional<CliffordTableau> is_clifford(const Gate& u);

/// The iterated conjugation map on tuples of Pauli strings:
/// a single-element tuple is plain conjugation, and longer tuples fold
/// left, conjugating the previous result by each next string's matrix.
Gate f_apply(const Gate& u, std::span<const PauliString> tuple);

/**
 * Decides hierarchy-level membership by the definitional recursion:
 * level 1 is the (projective) Pauli test, level 2 the tableau check, and
 * level k >= 3 requires every conjugate u P u-dagger over all 4^n
 * phase-free strings to sit in level k-1. Levels >= 3 are not groups, so
 * the quantifier really runs over all strings, not generators.
 *
 * Results for intermediate gates are memoized per decider instance, keyed
 * by the canonical projective serialization; identical conjugates recur
 * heavily in the recursion tree. The cache tolerates concurrent use
 * (values are deterministic, so duplicated work is benign).
 */
class LevelDecider {
 public:
  explicit LevelDecider(ResourceLimits limits = {});

  /// Membership at exactly level k (cumulative: level k contains k-1).
  bool in_level(const Gate& u, int k);
  /// Least k <= cap with in_level(u, k), else not-within-cap.
  LevelResult level(const Gate& u, int cap);

  const ResourceLimits& limits() const { return limits_; }
  std::size_t memo_size() const;

 private:
  bool in_level_memo(const Gate& u, int k);

  ResourceLimits limits_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace hlab
