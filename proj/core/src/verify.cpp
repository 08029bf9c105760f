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

#include "hlab/verify.hpp"

#include <map>

#include "hlab/json_io.hpp"

namespace hlab {

namespace {

void record_failure(SuiteReport& rep, std::string description, std::string expected,
                    std::string got, nlohmann::json counterexample) {
  rep.failures.push_back(SuiteFailure{std::move(description), std::move(expected),
                                      std::move(got), std::move(counterexample)});
}

nlohmann::json pair_counterexample(const Gate& u1, const Gate& u2) {
  return {{"u1", gate_to_json(u1)}, {"u2", gate_to_json(u2)}};
}

// Sample a word until the result is not projectively Pauli.
WordSample random_non_pauli(int n_qubits, int depth, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    WordSample w = random_gate_word(n_qubits, depth, rng);
    if (!pauli_check(w.gate).has_value()) return w;
  }
  throw std::logic_error("random_non_pauli: sampler failed to leave the Pauli group");
}

}  // namespace

SuiteReport verify_lemma1(int n, int samples, std::uint64_t seed) {
  if (n < 2 || n > 4) {
    throw std::invalid_argument("verify_lemma1: n must satisfy 2 <= n <= 4");
  }
  SuiteReport rep;
  rep.suite = "lemma1";
  rep.params = {{"n", n}, {"samples", samples}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  const int nb = n - 1;  // block qubit count

  auto check_pair = [&](const Gate& u1, const Gate& u2, bool expect_pauli,
                        const std::string& label) {
    ++rep.cases_run;
    const Gate u = direct_sum(u1, u2);
    const bool got = pauli_check(u).has_value();
    if (got != expect_pauli) {
      record_failure(rep, "pauli_check(direct_sum) on " + label,
                     expect_pauli ? "Pauli" : "not Pauli",
                     got ? "Pauli" : "not Pauli", pair_counterexample(u1, u2));
    }
  };

  if (n == 2) {
    // Exhaustive over 1-qubit Pauli blocks with both signs: the sum is
    // Pauli exactly when the words agree.
    const auto paulis = enumerate_paulis(nb);
    for (const auto& p : paulis) {
      for (const auto& q : paulis) {
        const Gate pg = to_gate(p);
        const Gate qg = to_gate(q);
        check_pair(pg, qg, p == q, "(" + p.to_string() + ", " + q.to_string() + ")");
        check_pair(pg, scale(-CycEntry::one(qg.ring_order_log2()), qg), p == q,
                   "(" + p.to_string() + ", -" + q.to_string() + ")");
      }
    }
  } else {
    for (int i = 0; i < samples; ++i) {
      const auto paulis = enumerate_paulis(nb);
      const auto& p = paulis[rng() % paulis.size()];
      const auto& q = paulis[rng() % paulis.size()];
      const bool negate = rng() & 1;
      Gate qg = to_gate(q);
      if (negate) qg = scale(-CycEntry::one(qg.ring_order_log2()), qg);
      check_pair(to_gate(p), qg, p == q,
                 "(" + p.to_string() + ", " + (negate ? "-" : "") + q.to_string() + ")");
    }
  }

  for (int i = 0; i < samples; ++i) {
    const WordSample w1 = random_non_pauli(nb, 8, rng);
    if (i % 2 == 0) {
      // Equal blocks up to sign, but non-Pauli: still outside level one.
      const bool negate = rng() & 1;
      Gate u2 = negate ? scale(-CycEntry::one(w1.gate.ring_order_log2()), w1.gate)
                       : w1.gate;
      check_pair(w1.gate, u2, false,
                 "non-Pauli word " + w1.word + (negate ? " with -same" : " with same"));
    } else {
      const WordSample w2 = random_non_pauli(nb, 8, rng);
      check_pair(w1.gate, w2.gate, false,
                 "non-Pauli words " + w1.word + ", " + w2.word);
    }
  }
  return rep;
}

SuiteReport verify_block_identities(int samples, int depth, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "block-identities";
  rep.params = {{"samples", samples}, {"depth", depth}, {"seed", seed}};
  std::mt19937_64 rng(seed);

  for (int i = 0; i < samples; ++i) {
    const int nb = (i % 2) + 1;
    const WordSample u1 = random_gate_word(nb, depth, rng);
    const WordSample u2 = random_gate_word(nb, depth, rng);
    const Gate x_i = tensor(gates::X(), Gate::identity(nb));

    ++rep.cases_run;
    const Gate d = direct_sum(u1.gate, u2.gate);
    const Gate lhs = matmul(matmul(d, x_i), dagger(d));
    const Gate rhs = matmul(
        direct_sum(matmul(u1.gate, dagger(u2.gate)), matmul(u2.gate, dagger(u1.gate))),
        x_i);
    if (lhs != rhs) {
      record_failure(rep, "block-swap identity on words " + u1.word + ", " + u2.word,
                     "equal matrices", "differ", pair_counterexample(u1.gate, u2.gate));
    }

    ++rep.cases_run;
    const WordSample u = random_gate_word(nb, depth, rng);
    const Gate cu = controlled(u.gate);
    const Gate lhs2 = matmul(matmul(cu, x_i), dagger(cu));
    const Gate rhs2 =
        matmul(direct_sum(Gate::identity(nb, u.gate.ring_order_log2()),
                          power(u.gate, 2)),
               tensor(gates::X(), dagger(u.gate)));
    if (lhs2 != rhs2) {
      record_failure(rep, "controlled-gate identity on word " + u.word,
                     "equal matrices", "differ",
                     nlohmann::json{{"u", gate_to_json(u.gate)}});
    }
  }
  return rep;
}

SuiteReport verify_descent_chain(const Gate& u1, const Gate& u2, int m_max) {
  if (u1.dim() != u2.dim()) {
    throw dimension_error("verify_descent_chain: blocks must have equal dimension");
  }
  SuiteReport rep;
  rep.suite = "descent-chain";
  rep.params = {{"m_max", m_max}};
  const int nb = u1.n_qubits();
  const Gate x_i = tensor(gates::X(), Gate::identity(nb));
  const Gate a = matmul(u1, dagger(u2));
  const Gate b = matmul(u2, dagger(u1));

  auto closed_form = [&](int m) {
    const long long e = 1LL << m;
    return matmul(direct_sum(power(a, e), power(b, e)), x_i);
  };
  auto step = [&](const Gate& g) { return matmul(matmul(g, x_i), dagger(g)); };

  Gate chain = step(direct_sum(u1, u2));
  ++rep.cases_run;
  if (chain != closed_form(0)) {
    record_failure(rep, "chain start vs closed form (exponent 1)", "equal matrices",
                   "differ", pair_counterexample(u1, u2));
  }
  for (int m = 1; m <= m_max; ++m) {
    chain = step(chain);
    ++rep.cases_run;
    if (chain != closed_form(m)) {
      record_failure(rep,
                     "iterated conjugation step vs closed form at m = " +
                         std::to_string(m),
                     "equal matrices", "differ", pair_counterexample(u1, u2));
    }
  }
  return rep;
}

SuiteReport verify_descent_chain_defaults(int m_max) {
  SuiteReport rep;
  rep.suite = "descent-chain";
  rep.params = {{"m_max", m_max}, {"pairs", {"(I,T)", "(I,H)", "(X,Y)"}}};
  const std::vector<std::pair<Gate, Gate>> pairs = {
      {gates::I(), gates::T()}, {gates::I(), gates::H()}, {gates::X(), gates::Y()}};
  for (const auto& [u1, u2] : pairs) {
    SuiteReport sub = verify_descent_chain(u1, u2, m_max);
    rep.cases_run += sub.cases_run;
    for (auto& f : sub.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

SuiteReport verify_classification_and_climbing(int cap) {
  if (cap > 6) {
    throw std::invalid_argument("verify_classification_and_climbing: cap must be <= 6");
  }
  if (cap < 4) {
    throw resource_limit_error(
        "verify_classification_and_climbing: the control-stacking check needs cap >= 4");
  }
  SuiteReport rep;
  rep.suite = "classification-climbing";
  rep.params = {{"cap", cap}};

  // The stacked-control check reaches four qubits.
  LevelDecider decider(ResourceLimits{4, std::max(6, cap), std::size_t(1) << 20});
  const AnalysisOptions opt{6, cap, 128};

  const auto cliffords = enumerate_single_qubit_cliffords();
  std::map<std::string, int> histogram;
  nlohmann::json climb = nlohmann::json::array();

  for (std::size_t idx = 0; idx < cliffords.size(); ++idx) {
    const Gate& u = cliffords[idx];
    const CliffordClass cls = classify_single_qubit_clifford(u);
    const OrderResult ord = order_projective(u, opt.order_max);
    histogram[to_string(cls.tag)] += 1;

    ++rep.cases_run;
    bool order_consistent = true;
    switch (cls.tag) {
      case CliffordTag::HadamardLike: order_consistent = ord.value == 2; break;
      case CliffordTag::OrderFour: order_consistent = ord.value == 4; break;
      case CliffordTag::OddOrder:
        order_consistent = ord.value.has_value() && (*ord.value % 2 == 1);
        break;
      default: break;
    }
    if (!order_consistent) {
      record_failure(rep, "classification/order consistency for element " +
                             std::to_string(idx),
                     "tag " + to_string(cls.tag) + " consistent with order",
                     "order " + (ord.value ? std::to_string(*ord.value) : "unknown"),
                     nlohmann::json{{"gate", gate_to_json(u)}});
    }
    if (cls.tag == CliffordTag::Unlisted) {
      rep.findings.push_back("element " + std::to_string(idx) +
                             " (projective order " +
                             (ord.value ? std::to_string(*ord.value) : "?") +
                             ") matches no listed family");
    }

    const ConditionReport cond = check_controlled_conditions(u, opt, decider);
    if (cond.verdict == Verdict::PassesNecessary) {
      ++rep.cases_run;
      const LevelResult measured = decider.level(controlled(u), cap);
      if (!measured.decided()) {
        record_failure(rep,
                       "controlled level decidable for passing element " +
                           std::to_string(idx),
                       "decided within cap " + std::to_string(cap), "not decided",
                       nlohmann::json{{"gate", gate_to_json(u)}});
      } else {
        const LevelResult lu = cond.block_levels.second;
        nlohmann::json row;
        row["element"] = idx;
        row["tag"] = to_string(cls.tag);
        row["level"] = lu.decided() ? nlohmann::json(*lu.level) : nlohmann::json();
        row["controlled_level"] = *measured.level;
        if (lu.decided() && *measured.level != *lu.level + 1) {
          rep.findings.push_back(
              "element " + std::to_string(idx) + " (tag " + to_string(cls.tag) +
              "): controlled level " + std::to_string(*measured.level) +
              " differs from one-above prediction " + std::to_string(*lu.level + 1));
          row["prediction_matched"] = false;
        } else {
          row["prediction_matched"] = true;
        }
        climb.push_back(std::move(row));
      }
    }
    if (cls.tag == CliffordTag::OddOrder) {
      ++rep.cases_run;
      if (cond.verdict != Verdict::FailsOrder) {
        record_failure(rep, "odd-order element " + std::to_string(idx) + " verdict",
                       "FailsOrder", to_string(cond.verdict),
                       nlohmann::json{{"gate", gate_to_json(u)}});
      }
      ++rep.cases_run;
      const LevelResult measured = decider.level(controlled(u), cap);
      if (measured.decided()) {
        record_failure(rep,
                       "controlled odd-order element " + std::to_string(idx) +
                           " must not appear within the cap",
                       "not decided within cap " + std::to_string(cap),
                       "level " + std::to_string(*measured.level),
                       nlohmann::json{{"gate", gate_to_json(u)}});
      }
    }
  }

  // Stacking controls on Z climbs exactly one level per control.
  Gate g = gates::Z();
  for (int controls = 1; controls <= 3; ++controls) {
    g = controlled(g);
    ++rep.cases_run;
    const LevelResult r = decider.level(g, cap);
    if (!r.decided() || *r.level != controls + 1) {
      record_failure(rep,
                     std::string(std::size_t(controls), 'C') + "Z level check",
                     "level " + std::to_string(controls + 1),
                     r.decided() ? "level " + std::to_string(*r.level) : "not decided",
                     nlohmann::json{{"gate", gate_to_json(g)}});
    }
  }

  rep.details = {{"histogram", histogram}, {"climbing", std::move(climb)}};
  return rep;
}

}  // namespace hlab
