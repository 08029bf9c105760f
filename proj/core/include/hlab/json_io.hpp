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

#include "hlab/verify.hpp"

namespace hlab {

/**
 * Gate wire format, bit-exact round trip:
 *   { "cyc_order_log2": a, "dim": d,
 *     "entries": [ { "coeffs": [...], "denom_log2": k }, ... ] }
 * with entries row-major (d*d of them). Coefficients are JSON integers
 * when they fit in 64 bits and decimal strings otherwise; both forms are
 * accepted on input.
 */
nlohmann::json gate_to_json(const Gate& g);
Gate gate_from_json(const nlohmann::json& j);  // checked for exact unitarity

nlohmann::json entry_to_json(const CycEntry& e);
CycEntry entry_from_json(const nlohmann::json& j, int order_log2);

nlohmann::json level_result_to_json(const LevelResult& r);
nlohmann::json order_result_to_json(const OrderResult& r);
nlohmann::json condition_report_to_json(const ConditionReport& r);
nlohmann::json clifford_class_to_json(const CliffordClass& c);
nlohmann::json suite_report_to_json(const SuiteReport& r);
nlohmann::json tableau_to_json(const CliffordTableau& t);

}  // namespace hlab
