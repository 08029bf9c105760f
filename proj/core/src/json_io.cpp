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

#include "hlab/json_io.hpp"

#include <limits>

namespace hlab {

namespace {

nlohmann::json bigint_to_json(const BigInt& x) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  if (x >= kMin && x <= kMax) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    return BigInt(j.get<std::string>());
  }
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v.has_value() ? nlohmann::json(*v) : nlohmann::json();
}

}  // namespace

nlohmann::json entry_to_json(const CycEntry& e) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(bigint_to_json(c));
  return {{"coeffs", std::move(coeffs)}, {"denom_log2", e.denom_log2()}};
}

CycEntry entry_from_json(const nlohmann::json& j, int order_log2) {
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) {
    throw std::invalid_argument("entry: \"coeffs\" must be an array");
  }
  CycEntry::CoeffVec c;
  c.reserve(coeffs.size());
  for (const auto& item : coeffs) c.push_back(bigint_from_json(item));
  return CycEntry::from_coeffs(std::move(c), j.at("denom_log2").get<int>(), order_log2);
}

nlohmann::json gate_to_json(const Gate& g) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : g.entries()) entries.push_back(entry_to_json(e));
  return {{"cyc_order_log2", g.ring_order_log2()},
          {"dim", g.dim()},
          {"entries", std::move(entries)}};
}

Gate gate_from_json(const nlohmann::json& j) {
  const int a = j.at("cyc_order_log2").get<int>();
  const int dim = j.at("dim").get<int>();
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("gate: \"dim\" must be a power of two");
  }
  int n = 0;
  while ((1 << n) < dim) ++n;
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != std::size_t(dim) * dim) {
    throw std::invalid_argument("gate: \"entries\" must hold dim*dim items");
  }
  std::vector<CycEntry> e;
  e.reserve(entries.size());
  for (const auto& item : entries) e.push_back(entry_from_json(item, a));
  return Gate::checked(n, std::move(e));
}

nlohmann::json level_result_to_json(const LevelResult& r) {
  if (r.decided()) {
    return {{"level", *r.level}, {"cap", r.searched_cap}};
  }
  return {{"not_within_cap", r.searched_cap}};
}

nlohmann::json order_result_to_json(const OrderResult& r) {
  nlohmann::json j{{"searched_up_to", r.searched_up_to}};
  if (r.value.has_value()) {
    j["value"] = *r.value;
    j["is_pow2"] = r.value_is_pow2();
  } else {
    j["value"] = nullptr;
  }
  return j;
}

nlohmann::json condition_report_to_json(const ConditionReport& r) {
  nlohmann::json j;
  j["mode"] = r.mode;
  if (r.block_split.has_value()) {
    j["block_split"] = {{"u1", gate_to_json(r.block_split->first)},
                        {"u2", gate_to_json(r.block_split->second)}};
  } else {
    j["block_split"] = nullptr;
  }
  j["order"] = order_result_to_json(r.order);
  j["order_is_pow2"] = r.order_is_pow2;
  j["m_found"] = opt_json(r.m_found);
  j["pauli_power"] = r.pauli_power.has_value()
                         ? nlohmann::json(r.pauli_power->to_string())
                         : nlohmann::json();
  j["sign_relation"] = opt_json(r.sign_relation);
  j["block_levels"] = {level_result_to_json(r.block_levels.first),
                       level_result_to_json(r.block_levels.second)};
  j["a2_least_identity_m"] = opt_json(r.a2_least_identity_m);
  j["a2_predecessor_is_pauli"] = opt_json(r.a2_predecessor_is_pauli);
  j["verdict"] = to_string(r.verdict);
  j["notes"] = r.notes;
  return j;
}

nlohmann::json clifford_class_to_json(const CliffordClass& c) {
  return {{"tag", to_string(c.tag)},
          {"matched_parametrizations", c.matched_parametrizations}};
}

nlohmann::json suite_report_to_json(const SuiteReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"description", f.description},
                        {"expected", f.expected},
                        {"got", f.got},
                        {"counterexample", f.counterexample}});
  }
  nlohmann::json j{{"suite", r.suite},
                   {"cases_run", r.cases_run},
                   {"failures", std::move(failures)},
                   {"findings", r.findings},
                   {"params", r.params}};
  if (!r.details.is_null()) j["details"] = r.details;
  return j;
}

nlohmann::json tableau_to_json(const CliffordTableau& t) {
  nlohmann::json x = nlohmann::json::array();
  nlohmann::json z = nlohmann::json::array();
  for (const auto& p : t.x_images) x.push_back(p.to_string());
  for (const auto& p : t.z_images) z.push_back(p.to_string());
  return {{"n", t.n}, {"x_images", std::move(x)}, {"z_images", std::move(z)}};
}

}  // namespace hlab
