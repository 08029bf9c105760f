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

#include <doctest.h>

#include <algorithm>

#include "hlab/analysis.hpp"
#include "support.hpp"

using namespace hlab;
using hlab::test::power_naive;

namespace {

Gate odd_order_gate() {
  return matmul(gates::rot('X', 2), gates::rot('Y', 2));
}

}  // namespace

TEST_CASE("split_blocks") {
  const auto ct = split_blocks(controlled(gates::T()));
  REQUIRE(ct.has_value());
  CHECK(ct->first == Gate::identity(1));
  CHECK(ct->second == gates::T());

  CHECK_FALSE(split_blocks(tensor(gates::X(), gates::I())).has_value());

  const auto xy = split_blocks(direct_sum(gates::X(), gates::Y()));
  REQUIRE(xy.has_value());
  CHECK(xy->first == gates::X());
  CHECK(xy->second == gates::Y());
  CHECK(xy->first.is_unitary());
  CHECK(xy->second.is_unitary());
}

TEST_CASE("controlled-gate conditions: T passes with m = 2") {
  LevelDecider decider;
  const AnalysisOptions opt;
  const ConditionReport rep = check_controlled_conditions(gates::T(), opt, decider);
  CHECK(rep.verdict == Verdict::PassesNecessary);
  CHECK(rep.order.value == 8);
  CHECK(rep.order_is_pow2);
  CHECK(rep.m_found == 2);
  REQUIRE(rep.pauli_power.has_value());
  CHECK(rep.pauli_power->letter(0) == 'Z');
  // Exact exponentiation oracle: T^4 = diag(1, zeta^4) = Z.
  CHECK(power_naive(gates::T(), 4) == gates::Z());
  CHECK(rep.block_levels.first.level == 1);
  CHECK(rep.block_levels.second.level == 3);
}

TEST_CASE("controlled-gate conditions: odd order fails") {
  LevelDecider decider;
  const AnalysisOptions opt;
  const ConditionReport rep = check_controlled_conditions(odd_order_gate(), opt, decider);
  CHECK(rep.verdict == Verdict::FailsOrder);
  CHECK(rep.order.value == 3);
  CHECK_FALSE(rep.order_is_pow2);
  CHECK_FALSE(rep.m_found.has_value());
  CHECK_FALSE(rep.a2_least_identity_m.has_value());
}

TEST_CASE("controlled-gate conditions: H passes at m = 1 with a noted caveat") {
  LevelDecider decider;
  const AnalysisOptions opt;
  const ConditionReport rep = check_controlled_conditions(gates::H(), opt, decider);
  CHECK(rep.verdict == Verdict::PassesNecessary);
  CHECK(rep.order.value == 2);
  CHECK(rep.m_found == 1);
  REQUIRE(rep.pauli_power.has_value());
  CHECK(rep.pauli_power->is_identity_word());
  // The strict chain form would need H itself to be Pauli; the report
  // must surface that divergence rather than hide it.
  CHECK(rep.a2_least_identity_m == 1);
  CHECK(rep.a2_predecessor_is_pauli == false);
  CHECK(rep.notes.find("strict power-chain") != std::string::npos);
}

TEST_CASE("direct-sum conditions") {
  LevelDecider decider;
  const AnalysisOptions opt;

  const ConditionReport ih = check_dsum_conditions(gates::I(), gates::H(), opt, decider);
  CHECK(ih.verdict == Verdict::PassesNecessary);
  CHECK(ih.m_found == 1);

  const ConditionReport xy = check_dsum_conditions(gates::X(), gates::Y(), opt, decider);
  CHECK(xy.verdict == Verdict::PassesNecessary);
  CHECK(xy.m_found == 1);
  REQUIRE(xy.pauli_power.has_value());
  CHECK(xy.pauli_power->is_identity_word());
  REQUIRE(xy.sign_relation.has_value());
  CHECK(*xy.sign_relation == 1);
  CHECK(xy.block_levels.first.level == 1);
  CHECK(xy.block_levels.second.level == 1);

  const ConditionReport io =
      check_dsum_conditions(gates::I(), odd_order_gate(), opt, decider);
  CHECK(io.verdict == Verdict::FailsPauliPower);

  CHECK_THROWS_AS(check_dsum_conditions(gates::X(), gates::CX(), opt, decider),
                  dimension_error);
}

TEST_CASE("sign relation is computed from both chains") {
  LevelDecider decider;
  const AnalysisOptions opt;
  // (S, S^dag): R = S^2 = Z, mirror = (S^dag)^2 = Z as well; both Pauli at
  // m = 1 with positive sign.
  const ConditionReport rep =
      check_dsum_conditions(gates::S(), dagger(gates::S()), opt, decider);
  CHECK(rep.m_found == 1);
  REQUIRE(rep.sign_relation.has_value());
  CHECK(*rep.sign_relation == 1);
}

TEST_CASE("the 24 single-qubit Cliffords enumerate deterministically") {
  const auto cliffords = enumerate_single_qubit_cliffords();
  REQUIRE(cliffords.size() == 24);

  // Contains the generators and all four projective Paulis.
  auto contains = [&](const Gate& g) {
    return std::any_of(cliffords.begin(), cliffords.end(),
                       [&](const Gate& c) { return projective_equal(c, g); });
  };
  CHECK(contains(gates::H()));
  CHECK(contains(gates::S()));
  int paulis = 0;
  for (const Gate& c : cliffords) {
    if (pauli_check(c).has_value()) ++paulis;
  }
  CHECK(paulis == 4);

  // Pairwise projectively distinct.
  for (std::size_t i = 0; i < cliffords.size(); ++i) {
    for (std::size_t j = i + 1; j < cliffords.size(); ++j) {
      CHECK_FALSE(projective_equal(cliffords[i], cliffords[j]));
    }
  }

  // Discovery order is reproducible.
  const auto again = enumerate_single_qubit_cliffords();
  for (std::size_t i = 0; i < cliffords.size(); ++i) {
    CHECK(cliffords[i] == again[i]);
  }
}

TEST_CASE("classification tags and witnesses") {
  const CliffordClass h = classify_single_qubit_clifford(gates::H());
  CHECK(h.tag == CliffordTag::HadamardLike);
  CHECK(std::find(h.matched_parametrizations.begin(),
                  h.matched_parametrizations.end(),
                  "ZY") != h.matched_parametrizations.end());

  CHECK(classify_single_qubit_clifford(gates::rot('Z', 2)).tag ==
        CliffordTag::OrderFour);
  CHECK(classify_single_qubit_clifford(gates::X()).tag == CliffordTag::Pauli);
  CHECK(classify_single_qubit_clifford(gates::T()).tag == CliffordTag::NotClifford);

  const CliffordClass odd = classify_single_qubit_clifford(odd_order_gate());
  CHECK(odd.tag == CliffordTag::OddOrder);
  CHECK(std::find(odd.matched_parametrizations.begin(),
                  odd.matched_parametrizations.end(),
                  "IXY") != odd.matched_parametrizations.end());

  // The inverse quarter rotations match no listed family; the classifier
  // reports them instead of forcing a tag.
  const CliffordClass inv = classify_single_qubit_clifford(dagger(gates::rot('Z', 2)));
  CHECK(inv.tag == CliffordTag::Unlisted);
  CHECK(inv.matched_parametrizations.empty());
  CHECK(order_projective(dagger(gates::rot('Z', 2)), 16).value == 4);

  CHECK_THROWS_AS(classify_single_qubit_clifford(gates::CX()), dimension_error);
}

TEST_CASE("classification is order-consistent across the enumeration") {
  int pauli = 0, hadamard = 0, order4 = 0, odd = 0, unlisted = 0;
  for (const Gate& u : enumerate_single_qubit_cliffords()) {
    const CliffordClass cls = classify_single_qubit_clifford(u);
    const OrderResult ord = order_projective(u, 128);
    REQUIRE(ord.value.has_value());
    switch (cls.tag) {
      case CliffordTag::Pauli:
        ++pauli;
        CHECK(*ord.value <= 2);
        break;
      case CliffordTag::HadamardLike:
        ++hadamard;
        CHECK(*ord.value == 2);
        break;
      case CliffordTag::OrderFour:
        ++order4;
        CHECK(*ord.value == 4);
        break;
      case CliffordTag::OddOrder:
        ++odd;
        CHECK(*ord.value % 2 == 1);
        break;
      case CliffordTag::Unlisted:
        ++unlisted;
        break;
      case CliffordTag::NotClifford:
        FAIL("enumerated gate must be Clifford");
    }
  }
  CHECK(pauli == 4);
  CHECK(hadamard == 6);
  CHECK(order4 == 3);
  CHECK(odd == 8);
  CHECK(pauli + hadamard + order4 + odd + unlisted == 24);
}

TEST_CASE("decided block gates pass the necessary conditions") {
  LevelDecider decider;
  const AnalysisOptions opt{6, 4, 128};
  const std::vector<Gate> corpus = {
      controlled(gates::X()), controlled(gates::H()), controlled(gates::T()),
      controlled(gates::S()), controlled(gates::Z()),
      direct_sum(gates::X(), gates::Y()),
      direct_sum(gates::S(), dagger(gates::S()))};
  for (const Gate& g : corpus) {
    const LevelResult lvl = decider.level(g, opt.cap);
    REQUIRE(lvl.decided());
    const auto blocks = split_blocks(g);
    REQUIRE(blocks.has_value());
    const ConditionReport rep =
        check_dsum_conditions(blocks->first, blocks->second, opt, decider);
    CHECK(rep.verdict == Verdict::PassesNecessary);
  }
}

TEST_CASE("odd-order contrapositive at a small cap") {
  LevelDecider decider;
  const AnalysisOptions opt{6, 3, 128};
  const ConditionReport rep =
      check_controlled_conditions(odd_order_gate(), opt, decider);
  CHECK(rep.verdict == Verdict::FailsOrder);
  CHECK_FALSE(decider.level(controlled(odd_order_gate()), 3).decided());
}

TEST_CASE("power-chain refinement is internally consistent") {
  LevelDecider decider;
  const AnalysisOptions opt;
  for (const Gate& u : enumerate_single_qubit_cliffords()) {
    const ConditionReport rep = check_controlled_conditions(u, opt, decider);
    if (!rep.a2_least_identity_m.has_value()) continue;
    const int m = *rep.a2_least_identity_m;
    // If u^(2^m) is a phase, squaring the previous link must be one too.
    const Gate prev = power(u, 1LL << (m - 1));
    CHECK(projective_equal(matmul(prev, prev), Gate::identity(1)));
  }
}

TEST_CASE("controlled-level prediction against measurement") {
  LevelDecider decider;
  const AnalysisOptions opt;

  const auto z = predict_controlled_level(gates::Z(), opt, decider);
  CHECK(z.prediction == 2);
  CHECK(z.measured.level == 2);

  const auto t = predict_controlled_level(gates::T(), opt, decider);
  CHECK(t.prediction == 4);
  CHECK(t.measured.level == 4);

  const auto h = predict_controlled_level(gates::H(), opt, decider);
  CHECK(h.prediction == 3);
  CHECK(h.measured.level == 3);

  const auto odd = predict_controlled_level(odd_order_gate(), opt, decider);
  CHECK_FALSE(odd.prediction.has_value());
  CHECK_FALSE(odd.measured.decided());
}
