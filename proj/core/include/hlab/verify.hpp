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

#include <nlohmann/json.hpp>

#include "hlab/analysis.hpp"

namespace hlab {

/// One failed case: what was checked, what was expected, what came out,
/// plus a complete JSON counterexample (including gate payloads) that the
/// CLI can re-ingest and re-check.
struct SuiteFailure {
  std::string description;
  std::string expected;
  std::string got;
  nlohmann::json counterexample;
};

/// Outcome of one verification suite. Deterministic given the echoed
/// parameters. Findings are observations worth reporting that are not
/// failures (e.g. classifier families left uncovered, or prediction
/// mismatches the underlying claim leaves open).
struct SuiteReport {
  std::string suite;
  int cases_run = 0;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> findings;
  nlohmann::json params;
  nlohmann::json details;
  bool passed() const { return failures.empty(); }
};

/// Block gates are Pauli exactly when the blocks are equal up to sign and
/// themselves Pauli. n = 2 runs the 1-qubit block pairs exhaustively;
/// larger n samples. `samples` extra random non-Pauli block pairs are
/// checked in the negative direction.
SuiteReport verify_lemma1(int n, int samples, std::uint64_t seed);

/// The block-swap identity
///   (U1 (+) U2)(X tensor I)(U1 (+) U2)^dag = (U1 U2^dag (+) U2 U1^dag)(X tensor I)
/// and its controlled-gate specialization
///   C(U)(X tensor I)C(U)^dag = (I (+) U^2)(X tensor U^dag),
/// both as exact matrix identities on random ring unitaries.
SuiteReport verify_block_identities(int samples, int depth, std::uint64_t seed);

/// Iterates the conjugation step on (U1 (+) U2) and checks each stage
/// against the closed form ((U1 U2^dag)^(2^m) (+) (U2 U1^dag)^(2^m))(X tensor I)
/// computed directly, for every m <= m_max.
SuiteReport verify_descent_chain(const Gate& u1, const Gate& u2, int m_max);

/// The three standard block pairs (I,T), (I,H), (X,Y) through
/// verify_descent_chain.
SuiteReport verify_descent_chain_defaults(int m_max);

/// Classifies the 24 single-qubit Cliffords, reports the partition
/// histogram (Unlisted members are findings), checks that every member
/// passing the necessary conditions has a decided controlled level, that
/// odd-order members have none within the cap, and that stacking controls
/// on Z climbs one level per control.
SuiteReport verify_classification_and_climbing(int cap);

}  // namespace hlab
