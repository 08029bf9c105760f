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

#include "hlab/json_io.hpp"
#include "support.hpp"

using namespace hlab;
using hlab::test::minus;
using hlab::test::power_naive;

TEST_CASE("matmul, dagger, power basics") {
  CHECK(matmul(gates::X(), gates::X()) == Gate::identity(1));
  CHECK(dagger(gates::H()) == gates::H());

  // Repeated squaring against the naive oracle: T^4 = Z exactly.
  CHECK(power(gates::T(), 4) == power_naive(gates::T(), 4));
  CHECK(power(gates::T(), 4) == gates::Z());
  CHECK(power(gates::H(), 0) == Gate::identity(1));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const Gate u = random_gate_word(2, 8, rng).gate;
    const int t = int(rng() % 7);
    CHECK(power(u, t) == power_naive(u, t));
  }

  CHECK_THROWS_AS(matmul(gates::X(), gates::CX()), dimension_error);
}

TEST_CASE("rings lift automatically in binary operations") {
  const Gate s2 = gates::S(2);  // representable with Gaussian entries
  CHECK(s2.ring_order_log2() == 2);
  const Gate st = matmul(s2, gates::T());
  CHECK(st.ring_order_log2() == 3);
  CHECK(st == matmul(gates::S(3), gates::T(3)));
}

TEST_CASE("tensor product") {
  const Gate ix = tensor(gates::I(), gates::X());
  CHECK(ix.dim() == 4);
  CHECK(ix.entry(0, 1).is_one());
  CHECK(ix.entry(2, 3).is_one());
  CHECK(ix.entry(0, 2).is_zero());

  // X tensor I is the antidiagonal block matrix of identities.
  const Gate xi = tensor(gates::X(), gates::I());
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      CHECK(xi.entry(r, c).is_zero());
      CHECK(xi.entry(r, c + 2) == (r == c ? CycEntry::one() : CycEntry::zero()));
      CHECK(xi.entry(r + 2, c) == (r == c ? CycEntry::one() : CycEntry::zero()));
    }
  }

  // Z tensor P stays Pauli for every 1-qubit Pauli P.
  for (const auto& p : enumerate_paulis(1)) {
    CHECK(pauli_check(tensor(gates::Z(), to_gate(p))).has_value());
  }
}

TEST_CASE("direct sum and controlled") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Gate u = random_gate_word(1 + int(i % 2), 6, rng).gate;
    CHECK(direct_sum(Gate::identity(u.n_qubits(), u.ring_order_log2()), u) ==
          controlled(u));
  }

  CHECK(direct_sum(gates::X(), gates::X()) == tensor(gates::I(), gates::X()));
  CHECK(direct_sum(gates::X(), minus(gates::X())) == tensor(gates::Z(), gates::X()));
  CHECK_THROWS_AS(direct_sum(gates::X(), gates::CX()), dimension_error);

  // CNOT with control on the left.
  const Gate cx = controlled(gates::X());
  CHECK(cx == gates::CX());
  CHECK(cx.entry(0, 0).is_one());
  CHECK(cx.entry(1, 1).is_one());
  CHECK(cx.entry(2, 3).is_one());
  CHECK(cx.entry(3, 2).is_one());

  // Toffoli: 8x8 permutation swapping |110> and |111>.
  const Gate ccx = controlled(controlled(gates::X()));
  CHECK(ccx.n_qubits() == 3);
  for (int r = 0; r < 6; ++r) CHECK(ccx.entry(r, r).is_one());
  CHECK(ccx.entry(6, 7).is_one());
  CHECK(ccx.entry(7, 6).is_one());

  const Gate ct = controlled(gates::T());
  CHECK(ct.is_diagonal());
  CHECK(ct.entry(3, 3) == CycEntry::root_power(1));
}

TEST_CASE("unitarity is preserved by the constructors") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 12; ++i) {
    const Gate a = random_gate_word(1, 10, rng).gate;
    const Gate b = random_gate_word(1, 10, rng).gate;
    CHECK(matmul(a, b).is_unitary());
    CHECK(dagger(a).is_unitary());
    CHECK(tensor(a, b).is_unitary());
    CHECK(direct_sum(a, b).is_unitary());
    CHECK(controlled(a).is_unitary());
    CHECK(power(a, 5).is_unitary());
  }
}

TEST_CASE("checked constructor rejects non-unitary input") {
  std::vector<CycEntry> e{CycEntry::one(), CycEntry::one(), CycEntry::zero(),
                          CycEntry::one()};
  CHECK_THROWS_AS(Gate::checked(1, std::move(e)), std::invalid_argument);
}

TEST_CASE("projective equality and canonical forms") {
  const Gate h = gates::H();
  CHECK(projective_equal(h, scale(CycEntry::root_power(2), h)));
  CHECK_FALSE(projective_equal(gates::X(), gates::Z()));

  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const Gate u = random_gate_word(1 + int(i % 2), 8, rng).gate;
    const Gate cu = canonical_form(u);
    CHECK(canonical_form(cu) == cu);
    CHECK(projective_equal(u, cu));
  }

  // Equivalence relation, and invariance under phases on either side.
  for (int i = 0; i < 20; ++i) {
    const Gate a = random_gate_word(1, 8, rng).gate;
    const Gate b = random_gate_word(1, 8, rng).gate;
    const Gate c = random_gate_word(1, 8, rng).gate;
    CHECK(projective_equal(a, a));
    CHECK(projective_equal(a, b) == projective_equal(b, a));
    if (projective_equal(a, b) && projective_equal(b, c)) {
      CHECK(projective_equal(a, c));
    }
    const int j = int(rng() % 8);
    CHECK(projective_equal(a, scale(CycEntry::root_power(j), a)));
    CHECK(projective_equal(scale(CycEntry::root_power(j), a), a));
    CHECK(projective_equal(a, b) ==
          (canonical_form(a) == canonical_form(b)));
  }
}

TEST_CASE("projective order search") {
  CHECK(order_projective(gates::rot('X', 2), 128).value == 4);

  const Gate hadamard_like = matmul(gates::X(), gates::rot('Y', 2));
  CHECK(order_projective(hadamard_like, 128).value == 2);

  const Gate odd = matmul(gates::rot('X', 2), gates::rot('Y', 2));
  const auto ord = order_projective(odd, 128);
  CHECK(ord.value == 3);
  CHECK_FALSE(ord.value_is_pow2());
  // Exact exponentiation confirms: the cube is a phase times identity.
  CHECK(projective_equal(power_naive(odd, 3), Gate::identity(1)));
  CHECK_FALSE(projective_equal(power_naive(odd, 2), Gate::identity(1)));

  CHECK(order_projective(Gate::identity(2), 8).value == 1);
  CHECK_FALSE(order_projective(gates::T(), 7).value.has_value());
  CHECK(order_projective(gates::T(), 8).value == 8);
}

TEST_CASE("block-swap identity holds for random ring unitaries") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    const int nb = 1 + int(i % 2);
    const Gate u1 = random_gate_word(nb, 7, rng).gate;
    const Gate u2 = random_gate_word(nb, 7, rng).gate;
    const Gate x_i = tensor(gates::X(), Gate::identity(nb));
    const Gate d = direct_sum(u1, u2);
    CHECK(matmul(d, matmul(x_i, dagger(d))) ==
          matmul(direct_sum(matmul(u1, dagger(u2)), matmul(u2, dagger(u1))), x_i));
  }
}

TEST_CASE("rot constructors") {
  // rot(Z, 2) = diag(zeta, conj(zeta)) is S-dagger up to a global phase;
  // the +pi/4 rotation phases |1> by -i, not i.
  CHECK(projective_equal(gates::rot('Z', 2), dagger(gates::S())));
  CHECK_FALSE(projective_equal(gates::rot('Z', 2), gates::S()));

  // rot(P, 1) = iP.
  for (const char axis : {'X', 'Y', 'Z'}) {
    const Gate r = gates::rot(axis, 1);
    const Gate p = to_gate(PauliString::from_letters(std::string(1, axis)));
    CHECK(r == scale(CycEntry::root_power(2), p));
  }

  // Squaring a finer rotation recovers the coarser one; ring order widens.
  const Gate r3 = gates::rot('Z', 3);
  CHECK(r3.ring_order_log2() == 4);
  CHECK(power(r3, 2) == gates::rot('Z', 2).lifted(4));

  CHECK_THROWS_AS(gates::rot('Z', 0), std::invalid_argument);
  CHECK_THROWS_AS(gates::rot('W', 2), std::invalid_argument);
  CHECK_THROWS_AS(gates::rot('Z', 8), std::invalid_argument);
}

TEST_CASE("gate JSON round trip is bit exact") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 15; ++i) {
    const Gate u = random_gate_word(1 + int(i % 2), 20, rng).gate;
    const Gate back = gate_from_json(gate_to_json(u));
    CHECK(back == u);
    CHECK(back.serialize_key() == u.serialize_key());
  }

  // Large coefficients fall back to decimal strings.
  const BigInt big("98765432109876543210987654321098765432109");
  const CycEntry e = CycEntry::from_coeffs({big, 3, -big, 7}, 9, 3);
  const CycEntry round = entry_from_json(entry_to_json(e), 3);
  CHECK(round == e);

  nlohmann::json bad = gate_to_json(gates::H());
  bad["entries"][0]["coeffs"][0] = 999;  // breaks unitarity
  CHECK_THROWS_AS(gate_from_json(bad), std::invalid_argument);
}

TEST_CASE("word sampler is deterministic per seed") {
  std::mt19937_64 a(77), b(77), c(78);
  const WordSample w1 = random_gate_word(2, 12, a);
  const WordSample w2 = random_gate_word(2, 12, b);
  const WordSample w3 = random_gate_word(2, 12, c);
  CHECK(w1.word == w2.word);
  CHECK(w1.gate == w2.gate);
  CHECK(w1.gate.is_unitary());
  CHECK(w3.gate.is_unitary());
}
