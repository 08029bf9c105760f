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

#include "hlab/cyclotomic.hpp"
#include "support.hpp"

using hlab::BigInt;
using hlab::CycEntry;

namespace {

CycEntry zeta(long long j, int a = 3) { return CycEntry::root_power(j, a); }

}  // namespace

TEST_CASE("additive basics") {
  CHECK((zeta(1) + (-zeta(1))).is_zero());

  const CycEntry half = CycEntry::dyadic(1, 1);
  const CycEntry one = half + half;
  CHECK(one.is_one());
  CHECK(one.denom_log2() == 0);

  const CycEntry sum = zeta(1) + zeta(3);
  CHECK(sum.denom_log2() == 0);
  CHECK(sum.coeffs()[0] == 0);
  CHECK(sum.coeffs()[1] == 1);
  CHECK(sum.coeffs()[2] == 0);
  CHECK(sum.coeffs()[3] == 1);
}

TEST_CASE("multiplicative basics") {
  CHECK(zeta(1) * zeta(3) == -CycEntry::one());

  // s = (zeta - zeta^3)/2 is 1/sqrt(2); its square is 1/2.
  const CycEntry s = (zeta(1) - zeta(3)).div_pow2(1);
  CHECK(s * s == CycEntry::dyadic(1, 1));

  CHECK(zeta(2) * zeta(2) == -CycEntry::one());
}

TEST_CASE("conjugation") {
  CHECK(zeta(1).conj() == -zeta(3));
  CHECK(CycEntry::dyadic(1, 1).conj() == CycEntry::dyadic(1, 1));
  CHECK(zeta(2).conj() == -zeta(2));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const CycEntry x = hlab::test::random_entry(rng);
    CHECK(x.conj().conj() == x);
    CHECK((x * x.conj()).is_real());
  }
}

TEST_CASE("ring order mismatch is an error") {
  const CycEntry a2 = CycEntry::one(2);
  const CycEntry a3 = CycEntry::one(3);
  CHECK_THROWS_AS((void)(a2 + a3), hlab::ring_mismatch_error);
  CHECK_THROWS_AS((void)(a2 * a3), hlab::ring_mismatch_error);
}

TEST_CASE("lift embeds values") {
  // i lives at a = 2 as zeta_4; at a = 3 it is zeta^2.
  const CycEntry i2 = CycEntry::root_power(1, 2);
  CHECK(i2.lift(3) == zeta(2));

  CHECK(CycEntry::one(2).lift(4) == CycEntry::one(4));

  // Homomorphism on a spot pair.
  const CycEntry x = zeta(1), y = zeta(3);
  CHECK(x.lift(4) * y.lift(4) == (x * y).lift(4));

  CHECK_THROWS_AS(zeta(1, 4).lift(3), std::invalid_argument);
}

TEST_CASE("canonical form is unique and normalization idempotent") {
  // The same value built two ways lands on one representation.
  const CycEntry a = CycEntry::from_coeffs({2, 4, 6, 8}, 3, 3);
  const CycEntry b = CycEntry::from_coeffs({1, 2, 3, 4}, 2, 3);
  CHECK(a == b);
  CHECK(a.denom_log2() == 2);

  // k = 0 or at least one odd coefficient.
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const CycEntry x = hlab::test::random_entry(rng);
    if (x.denom_log2() > 0) {
      bool any_odd = false;
      for (const auto& c : x.coeffs()) any_odd = any_odd || ((c & 1) != 0);
      CHECK(any_odd);
    }
    // Re-normalizing canonical coefficients changes nothing.
    CHECK(CycEntry::from_coeffs(x.coeffs(), x.denom_log2(), x.order_log2()) == x);
  }
}

TEST_CASE("ring axioms hold exactly on random entries") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const CycEntry x = hlab::test::random_entry(rng);
    const CycEntry y = hlab::test::random_entry(rng);
    const CycEntry z = hlab::test::random_entry(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("lift is an injective ring homomorphism on sampled pairs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const CycEntry x = hlab::test::random_entry(rng);
    const CycEntry y = hlab::test::random_entry(rng);
    CHECK(x.lift(5) + y.lift(5) == (x + y).lift(5));
    CHECK(x.lift(5) * y.lift(5) == (x * y).lift(5));
    if (x != y) CHECK(x.lift(5) != y.lift(5));
  }
}

TEST_CASE("negacyclic reduction keeps zeta powers consistent") {
  // zeta^(2^(a-1)) = -1 in every supported ring.
  for (int a = 2; a <= 8; ++a) {
    CHECK(CycEntry::root_power(1LL << (a - 1), a) == -CycEntry::one(a));
    CHECK(CycEntry::root_power(1LL << a, a) == CycEntry::one(a));
  }
  // times_root agrees with explicit multiplication.
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const CycEntry x = hlab::test::random_entry(rng);
    const long long j = (long long)(rng() % 16);
    CHECK(x.times_root(j) == x * CycEntry::root_power(j));
  }
}

TEST_CASE("as_root_power recognizes exactly the phases") {
  for (int j = 0; j < 8; ++j) {
    const auto r = zeta(j).as_root_power();
    REQUIRE(r.has_value());
    CHECK(*r == j);
  }
  CHECK_FALSE((zeta(1) + zeta(2)).as_root_power().has_value());
  CHECK_FALSE(CycEntry::dyadic(1, 1).as_root_power().has_value());
  CHECK_FALSE(CycEntry::from_int(2).as_root_power().has_value());
}

TEST_CASE("big coefficients survive arithmetic and keys") {
  const BigInt big("123456789012345678901234567890123456789");
  const CycEntry x = CycEntry::from_coeffs({big, 1, 0, -big}, 5, 3);
  const CycEntry y = x * x;
  CHECK(y == y);  // canonical self-equality after a large convolution
  CHECK(x.key() == x.key());
  CHECK(x.key() != y.key());
  CHECK((x - x).is_zero());
}
