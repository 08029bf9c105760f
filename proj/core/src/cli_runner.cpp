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

#include "hlab/cli_runner.hpp"

#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hlab/expr.hpp"
#include "hlab/json_io.hpp"

namespace hlab {

namespace {

struct CliOptions {
  int cap = 5;
  int m_max = 6;
  int order_max = 128;
  int cyc_order = 3;
  int samples = 200;
  int depth = 6;
  std::uint64_t seed = 1;
  int max_qubits = 3;
  std::string format = "text";
  bool from_json = false;

  bool json() const { return format == "json"; }
  AnalysisOptions analysis() const { return AnalysisOptions{m_max, cap, order_max}; }
  ResourceLimits limits() const {
    return ResourceLimits{max_qubits, std::max(6, cap), std::size_t(1) << 20};
  }
};

std::string level_text(const LevelResult& r) {
  if (r.decided()) return std::to_string(*r.level);
  return "not decided within cap " + std::to_string(r.searched_cap);
}

std::string order_text(const OrderResult& r) {
  if (r.value.has_value()) {
    std::string s = std::to_string(*r.value);
    if (r.value_is_pow2()) s += " (a power of two)";
    return s;
  }
  return "not found up to " + std::to_string(r.searched_up_to);
}

struct GateInput {
  Gate gate;
  std::string label;
};

GateInput load_gate(const CliOptions& opt, const std::string& expr_text,
                    std::istream& in) {
  if (opt.from_json) {
    nlohmann::json j;
    in >> j;
    return GateInput{gate_from_json(j), "(from json)"};
  }
  if (expr_text.empty()) {
    throw std::invalid_argument("expected a gate expression (or --from-json)");
  }
  const ExprPtr ast = parse_expr(expr_text);
  EvalOptions ev;
  ev.cyc_order_log2 = opt.cyc_order;
  ev.max_qubits = std::max(6, opt.max_qubits);
  return GateInput{evaluate(*ast, ev), pretty_print(*ast)};
}

void print_suite_text(const SuiteReport& rep, std::ostream& out) {
  out << "suite " << rep.suite << ": " << rep.cases_run << " cases, "
      << rep.failures.size() << " failures"
      << (rep.passed() ? " (PASS)" : " (FAIL)") << "\n";
  for (const auto& f : rep.failures) {
    out << "  FAIL " << f.description << ": expected " << f.expected << ", got "
        << f.got << "\n";
    out << "       counterexample: " << f.counterexample.dump() << "\n";
  }
  for (const auto& note : rep.findings) {
    out << "  finding: " << note << "\n";
  }
  if (rep.details.contains("histogram")) {
    out << "  histogram: " << rep.details["histogram"].dump() << "\n";
  }
}

int cmd_analyze(const CliOptions& opt, const std::string& expr_text, std::istream& in,
                std::ostream& out) {
  const GateInput input = load_gate(opt, expr_text, in);
  const Gate& g = input.gate;
  if (g.n_qubits() < 1) {
    throw std::invalid_argument("analyze: zero-qubit expressions have no level");
  }
  LevelDecider decider(opt.limits());
  const LevelResult lvl = decider.level(g, opt.cap);
  const OrderResult ord = order_projective(g, opt.order_max);
  std::optional<CliffordClass> cls;
  if (g.n_qubits() == 1) cls = classify_single_qubit_clifford(g);
  const ConditionReport cond = check_controlled_conditions(g, opt.analysis(), decider);

  if (opt.json()) {
    nlohmann::json j{{"command", "analyze"},
                     {"input", input.label},
                     {"n_qubits", g.n_qubits()},
                     {"dim", g.dim()},
                     {"cyc_order_log2", g.ring_order_log2()},
                     {"level", level_result_to_json(lvl)},
                     {"order", order_result_to_json(ord)},
                     {"controlled_conditions", condition_report_to_json(cond)}};
    j["classification"] =
        cls.has_value() ? clifford_class_to_json(*cls) : nlohmann::json();
    out << j.dump(2) << "\n";
  } else {
    out << "input: " << input.label << " (" << g.n_qubits() << " qubit"
        << (g.n_qubits() == 1 ? "" : "s") << ", ring order 2^"
        << g.ring_order_log2() << ")\n";
    out << "level: " << level_text(lvl) << "\n";
    out << "projective order: " << order_text(ord) << "\n";
    if (cls.has_value()) {
      out << "classification: " << to_string(cls->tag);
      if (!cls->matched_parametrizations.empty()) {
        out << " (witnesses:";
        for (const auto& w : cls->matched_parametrizations) out << " " << w;
        out << ")";
      }
      out << "\n";
    }
    out << "controlled-gate conditions: " << to_string(cond.verdict);
    if (cond.m_found.has_value()) {
      out << " (m = " << *cond.m_found << ", power is " << cond.pauli_power->to_string()
          << ")";
    }
    out << "\n";
    if (!cond.notes.empty()) out << "notes: " << cond.notes << "\n";
  }
  return 0;
}

int cmd_level(const CliOptions& opt, const std::string& expr_text, std::istream& in,
              std::ostream& out) {
  const GateInput input = load_gate(opt, expr_text, in);
  if (input.gate.n_qubits() < 1) {
    throw std::invalid_argument("level: zero-qubit expressions have no level");
  }
  LevelDecider decider(opt.limits());
  const LevelResult lvl = decider.level(input.gate, opt.cap);
  if (opt.json()) {
    nlohmann::json j{{"command", "level"},
                     {"input", input.label},
                     {"level", level_result_to_json(lvl)}};
    out << j.dump(2) << "\n";
  } else {
    out << "level(" << input.label << "): " << level_text(lvl) << "\n";
  }
  return 0;
}

int cmd_controlled(const CliOptions& opt, const std::string& expr_text,
                   std::istream& in, std::ostream& out) {
  const GateInput input = load_gate(opt, expr_text, in);
  if (input.gate.n_qubits() < 1) {
    throw std::invalid_argument("controlled: zero-qubit expressions have no level");
  }
  LevelDecider decider(opt.limits());
  const ControlledLevelPrediction res =
      predict_controlled_level(input.gate, opt.analysis(), decider);
  if (opt.json()) {
    nlohmann::json j{{"command", "controlled"},
                     {"input", input.label},
                     {"prediction", res.prediction.has_value()
                                        ? nlohmann::json(*res.prediction)
                                        : nlohmann::json()},
                     {"prediction_is_conjecture", true},
                     {"measured", level_result_to_json(res.measured)},
                     {"conditions", condition_report_to_json(res.conditions)}};
    out << j.dump(2) << "\n";
  } else {
    out << "controlled(" << input.label << ")\n";
    out << "prediction (conjecture): "
        << (res.prediction.has_value() ? std::to_string(*res.prediction) : "none")
        << "\n";
    out << "measured: " << level_text(res.measured) << "\n";
    out << "conditions: " << to_string(res.conditions.verdict) << "\n";
    if (!res.conditions.notes.empty()) {
      out << "notes: " << res.conditions.notes << "\n";
    }
  }
  return 0;
}

int cmd_classify(const CliOptions& opt, std::ostream& out) {
  LevelDecider decider(opt.limits());
  const auto cliffords = enumerate_single_qubit_cliffords();
  std::map<std::string, int> histogram;
  nlohmann::json table = nlohmann::json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < cliffords.size(); ++i) {
    const Gate& g = cliffords[i];
    const CliffordClass cls = classify_single_qubit_clifford(g);
    const OrderResult ord = order_projective(g, opt.order_max);
    const LevelResult lvl = decider.level(g, opt.cap);
    histogram[to_string(cls.tag)] += 1;
    if (opt.json()) {
      table.push_back({{"index", i},
                       {"tag", to_string(cls.tag)},
                       {"order", ord.value.has_value() ? nlohmann::json(*ord.value)
                                                       : nlohmann::json()},
                       {"level", level_result_to_json(lvl)},
                       {"matched_parametrizations", cls.matched_parametrizations},
                       {"gate", gate_to_json(g)}});
    } else {
      text << "#" << i << "\t" << to_string(cls.tag) << "\torder "
           << order_text(ord) << "\tlevel " << level_text(lvl);
      if (!cls.matched_parametrizations.empty()) {
        text << "\twitnesses:";
        for (const auto& w : cls.matched_parametrizations) text << " " << w;
      }
      text << "\n";
    }
  }
  if (opt.json()) {
    nlohmann::json j{
        {"command", "classify"}, {"elements", std::move(table)}, {"histogram", histogram}};
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
    out << "histogram:";
    for (const auto& [tag, count] : histogram) out << " " << tag << "=" << count;
    out << "\n";
  }
  return 0;
}

int cmd_verify(const CliOptions& opt, const std::string& suite, std::ostream& out) {
  std::vector<SuiteReport> reports;
  auto run = [&](const std::string& name) {
    if (name == "lemma1") {
      reports.push_back(verify_lemma1(2, opt.samples, opt.seed));
    } else if (name == "block-identities") {
      reports.push_back(verify_block_identities(opt.samples, opt.depth, opt.seed));
    } else if (name == "descent-chain") {
      reports.push_back(verify_descent_chain_defaults(opt.m_max));
    } else if (name == "classification-climbing") {
      reports.push_back(verify_classification_and_climbing(opt.cap));
    } else {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
  };
  if (suite == "all") {
    run("lemma1");
    run("block-identities");
    run("descent-chain");
    run("classification-climbing");
  } else {
    run(suite);
  }

  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();

  if (opt.json()) {
    if (reports.size() == 1) {
      out << suite_report_to_json(reports[0]).dump(2) << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(suite_report_to_json(r));
      out << arr.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) print_suite_text(r, out);
  }
  return all_passed ? 0 : 1;
}

int cmd_parse(const CliOptions& opt, const std::string& expr_text,
              const std::string& emit, std::istream& in, std::ostream& out) {
  const GateInput input = load_gate(opt, expr_text, in);
  if (emit == "json") {
    out << gate_to_json(input.gate).dump(2) << "\n";
    return 0;
  }
  if (opt.json()) {
    nlohmann::json j{{"command", "parse"},
                     {"pretty", input.label},
                     {"n_qubits", input.gate.n_qubits()},
                     {"dim", input.gate.dim()},
                     {"cyc_order_log2", input.gate.ring_order_log2()}};
    out << j.dump(2) << "\n";
  } else {
    out << input.label << "  (" << input.gate.n_qubits() << " qubits, dim "
        << input.gate.dim() << ", ring order 2^" << input.gate.ring_order_log2()
        << ")\n";
  }
  return 0;
}

nlohmann::json error_object(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Clifford-hierarchy level decisions, necessary-condition "
               "checks and verification suites for qubit gates"};
  app.name("hierarchy-lab");
  app.fallthrough();

  CliOptions opt;
  app.add_option("--cap", opt.cap, "Level search cap")
      ->envname("HIERARCHY_LAB_CAP")
      ->capture_default_str();
  app.add_option("--m-max", opt.m_max, "Bound on m in the 2^m power searches")
      ->capture_default_str();
  app.add_option("--order-max", opt.order_max, "Bound for projective order search")
      ->capture_default_str();
  app.add_option("--cyc-order", opt.cyc_order,
                 "Cyclotomic ring order a (ring of 2^a-th roots of unity)")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  app.add_option("--samples", opt.samples, "Sample count for randomized suites")
      ->capture_default_str();
  app.add_option("--depth", opt.depth, "Word depth for random unitaries")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Random seed for the suites")
      ->capture_default_str();
  app.add_option("--max-qubits", opt.max_qubits,
                 "Qubit guard for the level recursion (k >= 3)")
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--from-json", opt.from_json,
               "Read the gate as JSON from stdin instead of an expression");

  std::string expr_text, suite_name, emit;

  auto* analyze = app.add_subcommand(
      "analyze", "Level, order, classification and controlled-gate conditions");
  analyze->add_option("expr", expr_text, "Gate expression");

  auto* level = app.add_subcommand("level", "Hierarchy level within the cap");
  level->add_option("expr", expr_text, "Gate expression");

  auto* controlled_cmd = app.add_subcommand(
      "controlled", "Predicted vs measured level of the controlled gate");
  controlled_cmd->add_option("expr", expr_text, "Gate expression");

  app.add_subcommand("classify",
                     "Classify all 24 projective single-qubit Clifford gates");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite_name, "Suite name")
      ->required()
      ->check(CLI::IsMember({"lemma1", "block-identities", "descent-chain",
                             "classification-climbing", "all"}));

  auto* parse_cmd = app.add_subcommand("parse", "Parse and evaluate an expression");
  parse_cmd->add_option("expr", expr_text, "Gate expression");
  parse_cmd->add_option("--emit", emit, "Emit format (json prints the gate wire format)")
      ->check(CLI::IsMember({"json"}));

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("hierarchy-lab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (opt.json()) {
      out << error_object("usage_error", e.what()).dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opt, expr_text, in, out);
    if (app.got_subcommand(level)) return cmd_level(opt, expr_text, in, out);
    if (app.got_subcommand(controlled_cmd)) {
      return cmd_controlled(opt, expr_text, in, out);
    }
    if (app.got_subcommand("classify")) return cmd_classify(opt, out);
    if (app.got_subcommand(verify)) return cmd_verify(opt, suite_name, out);
    if (app.got_subcommand(parse_cmd)) {
      return cmd_parse(opt, expr_text, emit, in, out);
    }
    err << "error: no command\n";
    return 2;
  } catch (const parse_error& e) {
    if (opt.json()) {
      nlohmann::json j = error_object("parse_error", e.what());
      j["error"]["position"] = e.position();
      out << j.dump(2) << "\n";
    } else {
      err << "parse error: " << e.what() << "\n";
    }
    return 2;
  } catch (const eval_error& e) {
    if (opt.json()) {
      nlohmann::json j = error_object("eval_error", e.what());
      j["error"]["span"] = {e.span().begin, e.span().end};
      out << j.dump(2) << "\n";
    } else {
      err << "evaluation error: " << e.what() << "\n";
    }
    return 2;
  } catch (const resource_limit_error& e) {
    if (opt.json()) {
      out << error_object("resource_limit", e.what()).dump(2) << "\n";
    } else {
      err << "resource limit: " << e.what() << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    if (opt.json()) {
      out << error_object("error", e.what()).dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 2;
  }
}

}  // namespace hlab
