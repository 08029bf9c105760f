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

#include <complex>
#include <optional>
#include <string>

#include <boost/container/small_vector.hpp>

#include "hlab/common.hpp"

namespace hlab {

/**
 * CycEntry: an exact element of the dyadic cyclotomic ring Z[zeta, 1/2],
 * where zeta = exp(i*pi/2^(a-1)) is a primitive 2^a-th root of unity.
 *
 * The value is sum_j coeffs[j] * zeta^j / 2^denom_log2 over the negacyclic
 * basis 1, zeta, ..., zeta^(2^(a-1)-1). The single reduction rule is
 * zeta^(2^(a-1)) = -1; the basis is linearly independent, so canonical
 * forms compare coefficient-wise. Canonical means denom_log2 = 0 or at
 * least one coefficient is odd.
 *
 * The default ring order a = 3 (zeta = exp(i*pi/4)) covers every gate
 * family this project enumerates; larger orders up to a = 8 exist so that
 * rotations by pi/2^k stay representable.
 *
 * Entries are immutable values; all operations are pure.
 */
class CycEntry {
 public:
  static constexpr int kMinOrderLog2 = 2;
  static constexpr int kMaxOrderLog2 = 8;
  static constexpr int kDefaultOrderLog2 = 3;

  using CoeffVec = boost::container::small_vector<BigInt, 8>;

  static CycEntry zero(int order_log2 = kDefaultOrderLog2);
  static CycEntry one(int order_log2 = kDefaultOrderLog2);
  static CycEntry from_int(BigInt value, int order_log2 = kDefaultOrderLog2);
  /// numerator / 2^denom_log2
  static CycEntry dyadic(BigInt numerator, int denom_log2,
                         int order_log2 = kDefaultOrderLog2);
  /// zeta^j for any integer j (reduced mod 2^a with the negacyclic sign).
  static CycEntry root_power(long long j, int order_log2 = kDefaultOrderLog2);
  /// General constructor; coeffs.size() must equal 2^(order_log2-1).
  /// The result is normalized to canonical form.
  static CycEntry from_coeffs(CoeffVec coeffs, int denom_log2, int order_log2);

  int order_log2() const { return order_log2_; }
  int basis_size() const { return 1 << (order_log2_ - 1); }
  int denom_log2() const { return denom_log2_; }
  const CoeffVec& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True iff the value is fixed by complex conjugation.
  bool is_real() const;
  /// If the value equals zeta^j for some 0 <= j < 2^a, returns j.
  std::optional<int> as_root_power() const;

  CycEntry operator-() const;
  /// Complex conjugate: zeta^j -> zeta^(2^a - j).
  CycEntry conj() const;
  /// Embed into a larger ring: zeta_{2^a}^j -> zeta_{2^a'}^(j * 2^(a'-a)).
  /// Shrinking the ring is an error.
  CycEntry lift(int new_order_log2) const;
  /// Multiply by zeta^j (a cheap coefficient rotation).
  CycEntry times_root(long long j) const;
  /// Divide by 2^m.
  CycEntry div_pow2(int m) const;

  friend CycEntry operator+(const CycEntry& x, const CycEntry& y);
  friend CycEntry operator-(const CycEntry& x, const CycEntry& y);
  friend CycEntry operator*(const CycEntry& x, const CycEntry& y);

  /// Exact value equality. Operands in different ring orders are lifted to
  /// the larger ring first; within one ring canonical forms are unique, so
  /// this is coefficient-wise comparison.
  friend bool operator==(const CycEntry& x, const CycEntry& y);
  friend bool operator!=(const CycEntry& x, const CycEntry& y) {
    return !(x == y);
  }

  /// Deterministic compact form "k:c0,c1,..."; used for ordering, hashing
  /// and memo keys.
  void append_key(std::string& out) const;
  std::string key() const;

  /// Debug-only decimal rendering; carries no contract.
  std::string to_string() const;
  std::complex<double> to_complex() const;

 private:
  CycEntry(int order_log2, CoeffVec coeffs, int denom_log2);
  void normalize();
  static void check_order(int order_log2);

  int order_log2_;
  int denom_log2_;
  CoeffVec coeffs_;

  friend class CycAccumulator;
};

/**
 * Accumulates a sum of products x*y without normalizing after every term;
 * used by the matrix inner loops. finish() produces the canonical entry.
 */
class CycAccumulator {
 public:
  explicit CycAccumulator(int order_log2);
  void add_product(const CycEntry& x, const CycEntry& y);
  void add(const CycEntry& x);
  CycEntry finish();

 private:
  int order_log2_;
  int denom_log2_;
  CycEntry::CoeffVec coeffs_;
};

}  // namespace hlab
