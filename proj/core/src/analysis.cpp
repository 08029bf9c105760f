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

#include "hlab/analysis.hpp"

#include <deque>
#include <unordered_set>

namespace hlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PassesNecessary: return "PassesNecessary";
    case Verdict::FailsOrder: return "FailsOrder";
    case Verdict::FailsPauliPower: return "FailsPauliPower";
    case Verdict::FailsBlockLevel: return "FailsBlockLevel";
  }
  return "?";
}

std::string to_string(CliffordTag t) {
  switch (t) {
    case CliffordTag::Pauli: return "Pauli";
    case CliffordTag::HadamardLike: return "HadamardLike";
    case CliffordTag::OrderFour: return "OrderFour";
    case CliffordTag::OddOrder: return "OddOrder";
    case CliffordTag::Unlisted: return "Unlisted";
    case CliffordTag::NotClifford: return "NotClifford";
  }
  return "?";
}

std::optional<std::pair<Gate, Gate>> split_blocks(const Gate& u) {
  if (u.n_qubits() < 1) return std::nullopt;
  const int d = u.dim();
  const int half = d / 2;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const bool off_block = (r < half) != (c < half);
      if (off_block && !u.entry(r, c).is_zero()) return std::nullopt;
    }
  }
  auto take = [&](int r0, int c0) {
    std::vector<CycEntry> e;
    e.reserve(std::size_t(half) * half);
    for (int r = 0; r < half; ++r) {
      for (int c = 0; c < half; ++c) {
        e.push_back(u.entry(r0 + r, c0 + c));
      }
    }
    return Gate::unchecked(u.n_qubits() - 1, std::move(e));
  };
  return std::make_pair(take(0, 0), take(half, half));
}

namespace {

// Powers u^(2^m) for m = 0..m_max by repeated squaring; index m.
std::vector<Gate> pow2_chain(const Gate& u, int m_max) {
  std::vector<Gate> chain;
  chain.reserve(std::size_t(m_max) + 1);
  chain.push_back(u);
  for (int m = 1; m <= m_max; ++m) {
    chain.push_back(matmul(chain.back(), chain.back()));
  }
  return chain;
}

}  // namespace

ConditionReport check_controlled_conditions(const Gate& u, const AnalysisOptions& opt,
                                            LevelDecider& decider) {
  ConditionReport rep;
  rep.mode = "controlled";
  rep.block_split = std::make_pair(
      Gate::identity(u.n_qubits(), u.ring_order_log2()), u);
  rep.order = order_projective(u, opt.order_max);
  rep.order_is_pow2 = rep.order.value_is_pow2();

  const Gate id = Gate::identity(u.n_qubits(), u.ring_order_log2());
  const auto chain = pow2_chain(u, opt.m_max);
  bool any_identity = false;
  for (int m = 1; m <= opt.m_max; ++m) {
    const Gate& g = chain[std::size_t(m)];
    if (!rep.m_found.has_value()) {
      if (const auto pc = pauli_check(g)) {
        rep.m_found = m;
        rep.pauli_power = pc->string;
      }
    }
    if (!rep.a2_least_identity_m.has_value() && projective_equal(g, id)) {
      rep.a2_least_identity_m = m;
      any_identity = true;
      rep.a2_predecessor_is_pauli =
          pauli_check(chain[std::size_t(m - 1)]).has_value();
    }
  }

  rep.block_levels = {decider.level(id, opt.cap), decider.level(u, opt.cap)};

  if (!any_identity && !rep.m_found.has_value()) {
    rep.verdict = Verdict::FailsOrder;
    rep.notes = "no power u^(2^m) reaches a Pauli string or the identity for m <= " +
                std::to_string(opt.m_max);
  } else if (!rep.block_levels.second.decided()) {
    rep.verdict = Verdict::FailsBlockLevel;
    rep.notes = "target gate level not decided within cap " + std::to_string(opt.cap);
  } else {
    rep.verdict = Verdict::PassesNecessary;
  }

  if (rep.a2_least_identity_m.has_value() && rep.a2_predecessor_is_pauli.has_value() &&
      !*rep.a2_predecessor_is_pauli) {
    if (!rep.notes.empty()) rep.notes += "; ";
    rep.notes +=
        "strict power-chain form fails at the least identity exponent m = " +
        std::to_string(*rep.a2_least_identity_m) +
        " (u^(2^(m-1)) is not Pauli); the some-m form is what is checked";
  }
  return rep;
}

ConditionReport check_dsum_conditions(const Gate& u1, const Gate& u2,
                                      const AnalysisOptions& opt,
                                      LevelDecider& decider) {
  if (u1.dim() != u2.dim()) {
    throw dimension_error("check_dsum_conditions: blocks must have equal dimension");
  }
  ConditionReport rep;
  rep.mode = "direct_sum";
  rep.block_split = std::make_pair(u1, u2);

  const Gate r = matmul(u1, dagger(u2));
  // The mirrored product is computed independently so the sign relation is
  // checked as stated, not via its algebraic shortcut.
  const Gate r_mirror = matmul(u2, dagger(u1));
  rep.order = order_projective(r, opt.order_max);
  rep.order_is_pow2 = rep.order.value_is_pow2();

  const auto chain_a = pow2_chain(r, opt.m_max);
  const auto chain_b = pow2_chain(r_mirror, opt.m_max);
  for (int m = 1; m <= opt.m_max && !rep.m_found.has_value(); ++m) {
    const Gate& a = chain_a[std::size_t(m)];
    const Gate& b = chain_b[std::size_t(m)];
    const auto pc = pauli_check(a);
    if (!pc.has_value()) continue;
    rep.m_found = m;
    rep.pauli_power = pc->string;
    if (a == b) {
      rep.sign_relation = 1;
    } else if (a == scale(-CycEntry::one(a.ring_order_log2()), b)) {
      rep.sign_relation = -1;
    } else {
      rep.notes = "mirrored power is not equal to the Pauli power up to sign";
    }
    if (!pauli_check(b).has_value()) {
      if (!rep.notes.empty()) rep.notes += "; ";
      rep.notes += "mirrored power is not Pauli";
    }
  }

  rep.block_levels = {decider.level(u1, opt.cap), decider.level(u2, opt.cap)};

  if (!rep.block_levels.first.decided() || !rep.block_levels.second.decided()) {
    rep.verdict = Verdict::FailsBlockLevel;
    if (!rep.notes.empty()) rep.notes += "; ";
    rep.notes += "block level not decided within cap " + std::to_string(opt.cap);
  } else if (!rep.m_found.has_value()) {
    rep.verdict = Verdict::FailsPauliPower;
    if (!rep.notes.empty()) rep.notes += "; ";
    rep.notes += "no power (u1 u2^dag)^(2^m) is Pauli for m <= " +
                 std::to_string(opt.m_max);
  } else {
    rep.verdict = Verdict::PassesNecessary;
  }
  return rep;
}

std::vector<Gate> enumerate_single_qubit_cliffords() {
  const std::vector<Gate> generators = {gates::H(), gates::S()};
  std::vector<Gate> found;
  std::unordered_set<std::string> seen;
  std::deque<Gate> work;
  for (const Gate& g : generators) {
    Gate c = canonical_form(g);
    const std::string key = c.serialize_key();
    if (seen.insert(key).second) {
      found.push_back(c);
      work.push_back(std::move(c));
    }
  }
  while (!work.empty()) {
    const Gate g = std::move(work.front());
    work.pop_front();
    for (const Gate& gen : generators) {
      Gate h = canonical_form(matmul(g, gen));
      const std::string key = h.serialize_key();
      if (seen.insert(key).second) {
        found.push_back(h);
        work.push_back(std::move(h));
      }
    }
  }
  if (found.size() != 24) {
    throw std::logic_error("enumerate_single_qubit_cliffords: closure of {H,S} has " +
                           std::to_string(found.size()) + " elements, expected 24");
  }
  return found;
}

CliffordClass classify_single_qubit_clifford(const Gate& u) {
  if (u.n_qubits() != 1) {
    throw dimension_error("classify_single_qubit_clifford: expected a 1-qubit gate");
  }
  CliffordClass result;
  if (!is_clifford(u).has_value()) {
    result.tag = CliffordTag::NotClifford;
    return result;
  }

  static const char kAxes[3] = {'X', 'Y', 'Z'};
  const bool is_pauli = pauli_check(u).has_value();

  bool any_h = false, any_4 = false, any_o = false;
  for (const char s1 : kAxes) {
    for (const char s2 : kAxes) {
      if (s1 == s2) continue;
      const Gate cand = matmul(to_gate(PauliString::from_letters(std::string(1, s1))),
                               gates::rot(s2, 2));
      if (projective_equal(u, cand)) {
        any_h = true;
        result.matched_parametrizations.push_back(std::string(1, s1) + s2);
      }
    }
  }
  for (const char s : kAxes) {
    if (projective_equal(u, gates::rot(s, 2))) {
      any_4 = true;
      result.matched_parametrizations.push_back(std::string(1, s));
    }
  }
  static const char kAxesWithI[4] = {'I', 'X', 'Y', 'Z'};
  for (const char s1 : kAxesWithI) {
    for (const char s2 : kAxes) {
      for (const char s3 : kAxes) {
        if (s2 == s3) continue;
        Gate cand = matmul(gates::rot(s2, 2), gates::rot(s3, 2));
        if (s1 != 'I') {
          cand = matmul(to_gate(PauliString::from_letters(std::string(1, s1))), cand);
        }
        if (projective_equal(u, cand)) {
          any_o = true;
          result.matched_parametrizations.push_back(std::string(1, s1) + s2 + s3);
        }
      }
    }
  }

  if (is_pauli) {
    result.tag = CliffordTag::Pauli;
  } else if (any_h) {
    result.tag = CliffordTag::HadamardLike;
  } else if (any_4) {
    result.tag = CliffordTag::OrderFour;
  } else if (any_o) {
    result.tag = CliffordTag::OddOrder;
  } else {
    result.tag = CliffordTag::Unlisted;
  }
  return result;
}

ControlledLevelPrediction predict_controlled_level(const Gate& u,
                                                   const AnalysisOptions& opt,
                                                   LevelDecider& decider) {
  ControlledLevelPrediction out{
      std::nullopt, LevelResult{}, check_controlled_conditions(u, opt, decider)};
  const LevelResult& lu = out.conditions.block_levels.second;
  if (out.conditions.verdict == Verdict::PassesNecessary && lu.decided()) {
    out.prediction = *lu.level + 1;
  }
  out.measured = decider.level(controlled(u), opt.cap);
  return out;
}

}  // namespace hlab
