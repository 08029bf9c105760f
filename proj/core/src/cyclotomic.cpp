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

#include "hlab/cyclotomic.hpp"

#include <cmath>
#include <sstream>

namespace hlab {

namespace {

bool all_even(const CycEntry::CoeffVec& coeffs) {
  for (const auto& c : coeffs) {
    if ((c & 1) != 0) return false;
  }
  return true;
}

bool all_zero(const CycEntry::CoeffVec& coeffs) {
  for (const auto& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

void CycEntry::check_order(int order_log2) {
  if (order_log2 < kMinOrderLog2 || order_log2 > kMaxOrderLog2) {
    throw std::invalid_argument("CycEntry: ring order a must satisfy 2 <= a <= 8, got " +
                                std::to_string(order_log2));
  }
}

CycEntry::CycEntry(int order_log2, CoeffVec coeffs, int denom_log2)
    : order_log2_(order_log2), denom_log2_(denom_log2), coeffs_(std::move(coeffs)) {
  normalize();
}

void CycEntry::normalize() {
  if (all_zero(coeffs_)) {
    denom_log2_ = 0;
    return;
  }
  while (denom_log2_ > 0 && all_even(coeffs_)) {
    for (auto& c : coeffs_) c >>= 1;
    --denom_log2_;
  }
}

CycEntry CycEntry::zero(int order_log2) {
  check_order(order_log2);
  return CycEntry(order_log2, CoeffVec(std::size_t(1) << (order_log2 - 1)), 0);
}

CycEntry CycEntry::one(int order_log2) {
  return from_int(1, order_log2);
}

CycEntry CycEntry::from_int(BigInt value, int order_log2) {
  check_order(order_log2);
  CoeffVec c(std::size_t(1) << (order_log2 - 1));
  c[0] = std::move(value);
  return CycEntry(order_log2, std::move(c), 0);
}

CycEntry CycEntry::dyadic(BigInt numerator, int denom_log2, int order_log2) {
  check_order(order_log2);
  if (denom_log2 < 0) {
    throw std::invalid_argument("CycEntry::dyadic: denom_log2 must be >= 0");
  }
  CoeffVec c(std::size_t(1) << (order_log2 - 1));
  c[0] = std::move(numerator);
  return CycEntry(order_log2, std::move(c), denom_log2);
}

CycEntry CycEntry::root_power(long long j, int order_log2) {
  return one(order_log2).times_root(j);
}

CycEntry CycEntry::from_coeffs(CoeffVec coeffs, int denom_log2, int order_log2) {
  check_order(order_log2);
  if (coeffs.size() != std::size_t(1) << (order_log2 - 1)) {
    throw std::invalid_argument("CycEntry::from_coeffs: expected 2^(a-1) coefficients");
  }
  if (denom_log2 < 0) {
    throw std::invalid_argument("CycEntry::from_coeffs: denom_log2 must be >= 0");
  }
  return CycEntry(order_log2, std::move(coeffs), denom_log2);
}

bool CycEntry::is_zero() const {
  return all_zero(coeffs_);
}

bool CycEntry::is_one() const {
  if (denom_log2_ != 0 || coeffs_[0] != 1) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

bool CycEntry::is_real() const {
  return *this == conj();
}

std::optional<int> CycEntry::as_root_power() const {
  if (denom_log2_ != 0) return std::nullopt;
  int found = -1;
  for (int j = 0; j < basis_size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (found >= 0) return std::nullopt;
    if (coeffs_[j] != 1 && coeffs_[j] != -1) return std::nullopt;
    found = j;
  }
  if (found < 0) return std::nullopt;
  // -zeta^j is zeta^(j + 2^(a-1)).
  return coeffs_[found] == 1 ? found : found + basis_size();
}

CycEntry CycEntry::operator-() const {
  CoeffVec c(coeffs_);
  for (auto& x : c) x = -x;
  return CycEntry(order_log2_, std::move(c), denom_log2_);
}

CycEntry CycEntry::conj() const {
  const int B = basis_size();
  CoeffVec c(std::size_t(B), BigInt(0));
  c[0] = coeffs_[0];
  for (int j = 1; j < B; ++j) {
    c[B - j] = -coeffs_[j];
  }
  return CycEntry(order_log2_, std::move(c), denom_log2_);
}

CycEntry CycEntry::lift(int new_order_log2) const {
  check_order(new_order_log2);
  if (new_order_log2 < order_log2_) {
    throw std::invalid_argument("CycEntry::lift: cannot shrink the ring order");
  }
  if (new_order_log2 == order_log2_) return *this;
  const int stride = 1 << (new_order_log2 - order_log2_);
  CoeffVec c(std::size_t(1) << (new_order_log2 - 1));
  for (int j = 0; j < basis_size(); ++j) {
    c[std::size_t(j) * stride] = coeffs_[j];
  }
  return CycEntry(new_order_log2, std::move(c), denom_log2_);
}

CycEntry CycEntry::times_root(long long j) const {
  const int B = basis_size();
  const long long period = 2LL * B;  // zeta^(2B) = 1
  long long shift = j % period;
  if (shift < 0) shift += period;
  CoeffVec c(std::size_t(B), BigInt(0));
  for (int i = 0; i < B; ++i) {
    if (coeffs_[i] == 0) continue;
    long long m = (i + shift) % period;
    if (m < B) {
      c[std::size_t(m)] += coeffs_[i];
    } else {
      c[std::size_t(m - B)] -= coeffs_[i];
    }
  }
  return CycEntry(order_log2_, std::move(c), denom_log2_);
}

CycEntry CycEntry::div_pow2(int m) const {
  if (m < 0) throw std::invalid_argument("CycEntry::div_pow2: m must be >= 0");
  return CycEntry(order_log2_, coeffs_, denom_log2_ + m);
}

CycEntry operator+(const CycEntry& x, const CycEntry& y) {
  if (x.order_log2_ != y.order_log2_) {
    throw ring_mismatch_error("CycEntry: operands live in different rings; lift first");
  }
  const int k = std::max(x.denom_log2_, y.denom_log2_);
  const int sx = k - x.denom_log2_;
  const int sy = k - y.denom_log2_;
  CycEntry::CoeffVec c(x.coeffs_.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = (x.coeffs_[j] << sx) + (y.coeffs_[j] << sy);
  }
  return CycEntry(x.order_log2_, std::move(c), k);
}

CycEntry operator-(const CycEntry& x, const CycEntry& y) {
  return x + (-y);
}

CycEntry operator*(const CycEntry& x, const CycEntry& y) {
  if (x.order_log2_ != y.order_log2_) {
    throw ring_mismatch_error("CycEntry: operands live in different rings; lift first");
  }
  const int B = x.basis_size();
  CycEntry::CoeffVec c(std::size_t(B), BigInt(0));
  // Negacyclic convolution: zeta^(i+j) wraps with a sign flip past B.
  for (int i = 0; i < B; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (int j = 0; j < B; ++j) {
      if (y.coeffs_[j] == 0) continue;
      const int t = i + j;
      if (t < B) {
        c[std::size_t(t)] += x.coeffs_[i] * y.coeffs_[j];
      } else {
        c[std::size_t(t - B)] -= x.coeffs_[i] * y.coeffs_[j];
      }
    }
  }
  return CycEntry(x.order_log2_, std::move(c), x.denom_log2_ + y.denom_log2_);
}

bool operator==(const CycEntry& x, const CycEntry& y) {
  if (x.order_log2_ != y.order_log2_) {
    const int a = std::max(x.order_log2_, y.order_log2_);
    return x.lift(a) == y.lift(a);
  }
  return x.denom_log2_ == y.denom_log2_ && x.coeffs_ == y.coeffs_;
}

void CycEntry::append_key(std::string& out) const {
  out += std::to_string(denom_log2_);
  out += ':';
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ',';
    out += coeffs_[j].str();
  }
}

std::string CycEntry::key() const {
  std::string s;
  append_key(s);
  return s;
}

std::string CycEntry::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < basis_size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << (coeffs_[j] > 0 ? " + " : " - ");
    const BigInt mag = coeffs_[j] < 0 ? BigInt(-coeffs_[j]) : coeffs_[j];
    if (first && coeffs_[j] < 0) os << "-";
    if (mag != 1 || j == 0) os << mag.str();
    if (j > 0) {
      if (mag != 1) os << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (denom_log2_ > 0) {
    std::ostringstream wrapped;
    wrapped << "(" << os.str() << ")/2";
    if (denom_log2_ > 1) wrapped << "^" << denom_log2_;
    return wrapped.str();
  }
  return os.str();
}

std::complex<double> CycEntry::to_complex() const {
  const double angle = M_PI / double(1 << (order_log2_ - 1));
  std::complex<double> acc(0.0, 0.0);
  for (int j = 0; j < basis_size(); ++j) {
    if (coeffs_[j] == 0) continue;
    acc += double(coeffs_[j].convert_to<double>()) *
           std::polar(1.0, angle * double(j));
  }
  return acc / std::pow(2.0, double(denom_log2_));
}

CycAccumulator::CycAccumulator(int order_log2)
    : order_log2_(order_log2),
      denom_log2_(0),
      coeffs_(std::size_t(1) << (order_log2 - 1)) {}

void CycAccumulator::add_product(const CycEntry& x, const CycEntry& y) {
  if (x.order_log2_ != order_log2_ || y.order_log2_ != order_log2_) {
    throw ring_mismatch_error("CycAccumulator: ring order mismatch");
  }
  const int B = 1 << (order_log2_ - 1);
  const int prod_denom = x.denom_log2_ + y.denom_log2_;
  int shift_acc = 0, shift_term = 0;
  if (prod_denom > denom_log2_) {
    shift_acc = prod_denom - denom_log2_;
    denom_log2_ = prod_denom;
  } else {
    shift_term = denom_log2_ - prod_denom;
  }
  if (shift_acc > 0) {
    for (auto& c : coeffs_) c <<= shift_acc;
  }
  for (int i = 0; i < B; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (int j = 0; j < B; ++j) {
      if (y.coeffs_[j] == 0) continue;
      BigInt term = x.coeffs_[i] * y.coeffs_[j];
      if (shift_term > 0) term <<= shift_term;
      const int t = i + j;
      if (t < B) {
        coeffs_[std::size_t(t)] += term;
      } else {
        coeffs_[std::size_t(t - B)] -= term;
      }
    }
  }
}

void CycAccumulator::add(const CycEntry& x) {
  if (x.order_log2_ != order_log2_) {
    throw ring_mismatch_error("CycAccumulator: ring order mismatch");
  }
  int shift_acc = 0, shift_term = 0;
  if (x.denom_log2_ > denom_log2_) {
    shift_acc = x.denom_log2_ - denom_log2_;
    denom_log2_ = x.denom_log2_;
  } else {
    shift_term = denom_log2_ - x.denom_log2_;
  }
  if (shift_acc > 0) {
    for (auto& c : coeffs_) c <<= shift_acc;
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (x.coeffs_[j] == 0) continue;
    coeffs_[j] += shift_term > 0 ? BigInt(x.coeffs_[j] << shift_term) : x.coeffs_[j];
  }
}

CycEntry CycAccumulator::finish() {
  return CycEntry(order_log2_, std::move(coeffs_), denom_log2_);
}

}  // namespace hlab
