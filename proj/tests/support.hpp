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

#include <random>

#include "hlab/gate.hpp"
#include "hlab/pauli.hpp"

namespace hlab::test {

/// Random canonical ring element with small coefficients.
inline CycEntry random_entry(std::mt19937_64& rng, int order_log2 = 3) {
  CycEntry::CoeffVec c;
  const int basis = 1 << (order_log2 - 1);
  for (int j = 0; j < basis; ++j) {
    c.push_back(BigInt(std::int64_t(rng() % 41) - 20));
  }
  const int k = int(rng() % 4);
  return CycEntry::from_coeffs(std::move(c), k, order_log2);
}

/// Naive t-fold multiplication, used as the independent exponentiation
/// oracle against power()'s repeated squaring.
inline Gate power_naive(const Gate& u, int t) {
  Gate acc = Gate::identity(u.n_qubits(), u.ring_order_log2());
  for (int i = 0; i < t; ++i) acc = matmul(acc, u);
  return acc;
}

/// Trace inner product Tr(P u) computed entry-by-entry from the dense
/// matrices, independent of the permutation shortcut in pauli_check.
inline CycEntry trace_product(const Gate& p, const Gate& u) {
  const int o = std::max(p.ring_order_log2(), u.ring_order_log2());
  const Gate a = p.lifted(o);
  const Gate b = u.lifted(o);
  CycAccumulator acc(o);
  for (int r = 0; r < a.dim(); ++r) {
    for (int m = 0; m < a.dim(); ++m) {
      if (a.entry(r, m).is_zero() || b.entry(m, r).is_zero()) continue;
      acc.add_product(a.entry(r, m), b.entry(m, r));
    }
  }
  return acc.finish();
}

inline Gate minus(const Gate& g) {
  return scale(-CycEntry::one(g.ring_order_log2()), g);
}

}  // namespace hlab::test
