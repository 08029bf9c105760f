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

#include "hlab/hierarchy.hpp"

namespace hlab {

bool CliffordTableau::symplectic_ok() const {
  if (int(x_images.size()) != n || int(z_images.size()) != n) return false;
  auto commutes = [](const PauliString& p, const PauliString& q) {
    int anti = 0;
    for (int j = 0; j < p.n; ++j) {
      anti ^= (p.x_at(j) & q.z_at(j)) ^ (p.z_at(j) & q.x_at(j));
    }
    return anti == 0;
  };
  // X_i and Z_i anticommute; every other generator pair commutes. The
  // images must reproduce exactly that pattern.
  auto image = [&](int idx) -> const PauliString& {
    return idx < n ? x_images[std::size_t(idx)] : z_images[std::size_t(idx - n)];
  };
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = i + 1; j < 2 * n; ++j) {
      const bool should_anticommute = (j == i + n);
      if (commutes(image(i), image(j)) == should_anticommute) return false;
    }
  }
  return true;
}

Gate conjugate(const Gate& u, const PauliString& p) {
  if (u.n_qubits() != p.n) {
    throw dimension_error("conjugate: qubit count mismatch");
  }
  return matmul(mul_gate_pauli(u, p), dagger(u));
}

std::optional<CliffordTableau> is_clifford(const Gate& u) {
  const int n = u.n_qubits();
  CliffordTableau tab;
  tab.n = n;
  for (int q = 0; q < n; ++q) {
    for (const char letter : {'X', 'Z'}) {
      const auto image = pauli_check(conjugate(u, PauliString::single(n, q, letter)));
      if (!image.has_value()) return std::nullopt;
      (letter == 'X' ? tab.x_images : tab.z_images).push_back(image->string);
    }
  }
  return tab;
}

Gate f_apply(const Gate& u, std::span<const PauliString> tuple) {
  if (tuple.empty()) {
    throw std::invalid_argument("f_apply: tuple must not be empty");
  }
  Gate g = conjugate(u, tuple[0]);
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    g = conjugate(g, tuple[i]);
  }
  return g;
}

LevelDecider::LevelDecider(ResourceLimits limits) : limits_(limits) {}

std::size_t LevelDecider::memo_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

bool LevelDecider::in_level(const Gate& u, int k) {
  if (k < 1) throw std::invalid_argument("in_level: k must be >= 1");
  if (k > limits_.max_cap) {
    throw resource_limit_error("in_level: level " + std::to_string(k) +
                               " exceeds the cap guard " +
                               std::to_string(limits_.max_cap));
  }
  if (k >= 3 && u.n_qubits() > limits_.max_qubits) {
    throw resource_limit_error("in_level: " + std::to_string(u.n_qubits()) +
                               " qubits exceed the recursion guard " +
                               std::to_string(limits_.max_qubits));
  }
  if (k == 1) return pauli_check(u).has_value();
  return in_level_memo(u, k);
}

bool LevelDecider::in_level_memo(const Gate& u, int k) {
  const std::string key = canonical_key(u) + "#" + std::to_string(k);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  bool result = true;
  if (k == 2) {
    result = is_clifford(u).has_value();
  } else {
    // Phase-free strings suffice: phases commute through conjugation.
    for (const PauliString& p : enumerate_paulis(u.n_qubits())) {
      if (!in_level(conjugate(u, p), k - 1)) {
        result = false;
        break;
      }
    }
  }
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (memo_.size() < limits_.memo_entries) memo_.emplace(key, result);
  }
  return result;
}

LevelResult LevelDecider::level(const Gate& u, int cap) {
  if (cap < 1) throw std::invalid_argument("level: cap must be >= 1");
  for (int k = 1; k <= cap; ++k) {
    if (in_level(u, k)) return LevelResult{k, cap};
  }
  return LevelResult{std::nullopt, cap};
}

}  // namespace hlab
