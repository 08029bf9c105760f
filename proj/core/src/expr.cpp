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

#include "hlab/expr.hpp"

#include <array>
#include <cctype>

namespace hlab {

namespace {

const std::array<std::string_view, 10> kAtoms = {"I",  "X",  "Y", "Z",    "H",
                                                 "S",  "T",  "CX", "CZ", "SWAP"};

bool is_atom(std::string_view name) {
  for (const auto a : kAtoms) {
    if (a == name) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_product();
    skip_ws();
    if (pos_ != text_.size()) {
      throw parse_error("unexpected trailing input", int(pos_));
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(unsigned(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw parse_error(std::string("expected '") + c + "'", int(pos_));
    }
    ++pos_;
  }

  std::string read_name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(unsigned(text_[pos_]))) ++pos_;
    if (start == pos_) {
      throw parse_error("expected a name", int(pos_));
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long long read_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(unsigned(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(unsigned(text_[start])))) {
      throw parse_error("expected an integer", int(start));
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  ExprPtr parse_product() {
    skip_ws();
    const int begin = int(pos_);
    ExprPtr first = parse_term();
    if (!peek_is('*')) return first;
    auto node = std::make_shared<GateExpr>();
    node->kind = GateExpr::Kind::Product;
    node->children.push_back(std::move(first));
    while (peek_is('*')) {
      expect('*');
      node->children.push_back(parse_term());
    }
    node->span = {begin, int(pos_)};
    return node;
  }

  ExprPtr parse_term() {
    skip_ws();
    if (peek_is('(')) {
      expect('(');
      ExprPtr inner = parse_product();
      expect(')');
      return inner;
    }
    const int begin = int(pos_);
    const std::string name = read_name();
    skip_ws();
    const bool call = pos_ < text_.size() && text_[pos_] == '(';

    auto node = std::make_shared<GateExpr>();
    if (!call) {
      if (!is_atom(name)) {
        throw parse_error("unknown atom '" + name + "'", begin);
      }
      node->kind = GateExpr::Kind::Atom;
      node->atom = name;
      node->span = {begin, int(pos_)};
      return node;
    }

    expect('(');
    if (name == "C") {
      node->kind = GateExpr::Kind::Controlled;
      node->children.push_back(parse_product());
    } else if (name == "kron" || name == "dsum") {
      node->kind = name == "kron" ? GateExpr::Kind::Kron : GateExpr::Kind::DSum;
      node->children.push_back(parse_product());
      expect(',');
      node->children.push_back(parse_product());
    } else if (name == "dag") {
      node->kind = GateExpr::Kind::Dag;
      node->children.push_back(parse_product());
    } else if (name == "pow") {
      node->kind = GateExpr::Kind::Pow;
      node->children.push_back(parse_product());
      expect(',');
      node->int_arg = read_int();
    } else if (name == "rot") {
      node->kind = GateExpr::Kind::Rot;
      skip_ws();
      const int axis_pos = int(pos_);
      const std::string axis = read_name();
      if (axis.size() != 1 || (axis[0] != 'X' && axis[0] != 'Y' && axis[0] != 'Z')) {
        throw parse_error("rot: axis must be X, Y or Z", axis_pos);
      }
      node->pauli_arg = axis[0];
      expect(',');
      const int k_pos = int(pos_);
      node->int_arg = read_int();
      if (node->int_arg < 1) {
        throw parse_error("rot: k must be >= 1", k_pos);
      }
    } else if (name == "phase") {
      node->kind = GateExpr::Kind::Phase;
      node->int_arg = read_int();
    } else if (name == "id") {
      node->kind = GateExpr::Kind::Id;
      const int n_pos = int(pos_);
      node->int_arg = read_int();
      if (node->int_arg < 0) {
        throw parse_error("id: qubit count must be >= 0", n_pos);
      }
    } else {
      throw parse_error("unknown function '" + name + "'", begin);
    }
    expect(')');
    node->span = {begin, int(pos_)};
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  return Parser(text).parse();
}

std::string pretty_print(const GateExpr& e) {
  switch (e.kind) {
    case GateExpr::Kind::Atom:
      return e.atom;
    case GateExpr::Kind::Controlled:
      return "C(" + pretty_print(*e.children[0]) + ")";
    case GateExpr::Kind::Kron:
      return "kron(" + pretty_print(*e.children[0]) + "," +
             pretty_print(*e.children[1]) + ")";
    case GateExpr::Kind::DSum:
      return "dsum(" + pretty_print(*e.children[0]) + "," +
             pretty_print(*e.children[1]) + ")";
    case GateExpr::Kind::Dag:
      return "dag(" + pretty_print(*e.children[0]) + ")";
    case GateExpr::Kind::Pow:
      return "pow(" + pretty_print(*e.children[0]) + "," +
             std::to_string(e.int_arg) + ")";
    case GateExpr::Kind::Rot:
      return std::string("rot(") + e.pauli_arg + "," + std::to_string(e.int_arg) + ")";
    case GateExpr::Kind::Phase:
      return "phase(" + std::to_string(e.int_arg) + ")";
    case GateExpr::Kind::Id:
      return "id(" + std::to_string(e.int_arg) + ")";
    case GateExpr::Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += "*";
        const bool needs_parens = e.children[i]->kind == GateExpr::Kind::Product;
        if (needs_parens) s += "(";
        s += pretty_print(*e.children[i]);
        if (needs_parens) s += ")";
      }
      return s;
    }
  }
  return "?";
}

bool expr_equal(const GateExpr& a, const GateExpr& b) {
  if (a.kind != b.kind || a.atom != b.atom || a.int_arg != b.int_arg ||
      a.pauli_arg != b.pauli_arg || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!expr_equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

namespace {

Gate eval_node(const GateExpr& e, const EvalOptions& opt) {
  const int a = opt.cyc_order_log2;
  auto guard_width = [&](const Gate& g, const GateExpr& node) -> const Gate& {
    if (g.n_qubits() > opt.max_qubits) {
      throw eval_error("expression exceeds the " + std::to_string(opt.max_qubits) +
                           "-qubit evaluation guard",
                       node.span);
    }
    return g;
  };
  switch (e.kind) {
    case GateExpr::Kind::Atom: {
      if (e.atom == "I") return gates::I(a);
      if (e.atom == "X") return gates::X(a);
      if (e.atom == "Y") return gates::Y(a);
      if (e.atom == "Z") return gates::Z(a);
      if (e.atom == "H") return gates::H(a);
      if (e.atom == "S") return gates::S(a);
      if (e.atom == "T") return gates::T(a);
      if (e.atom == "CX") return gates::CX(a);
      if (e.atom == "CZ") return gates::CZ(a);
      if (e.atom == "SWAP") return gates::SWAP(a);
      throw eval_error("unknown atom '" + e.atom + "'", e.span);
    }
    case GateExpr::Kind::Controlled:
      return guard_width(controlled(eval_node(*e.children[0], opt)), e);
    case GateExpr::Kind::Kron:
      return guard_width(
          tensor(eval_node(*e.children[0], opt), eval_node(*e.children[1], opt)), e);
    case GateExpr::Kind::DSum: {
      const Gate u1 = eval_node(*e.children[0], opt);
      const Gate u2 = eval_node(*e.children[1], opt);
      if (u1.dim() != u2.dim()) {
        throw eval_error("dsum: blocks must have equal dimension", e.span);
      }
      return guard_width(direct_sum(u1, u2), e);
    }
    case GateExpr::Kind::Dag:
      return dagger(eval_node(*e.children[0], opt));
    case GateExpr::Kind::Pow: {
      if (e.int_arg < 0) {
        throw eval_error("pow: exponent must be >= 0 (use dag for inverses)", e.span);
      }
      return power(eval_node(*e.children[0], opt), e.int_arg);
    }
    case GateExpr::Kind::Rot:
      return gates::rot(e.pauli_arg, int(e.int_arg), a);
    case GateExpr::Kind::Phase:
      return Gate::unchecked(0, {CycEntry::root_power(e.int_arg, a)});
    case GateExpr::Kind::Id: {
      if (e.int_arg > opt.max_qubits) {
        throw eval_error("id: exceeds the evaluation guard", e.span);
      }
      return Gate::identity(int(e.int_arg), a);
    }
    case GateExpr::Kind::Product: {
      Gate acc = eval_node(*e.children[0], opt);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        const Gate rhs = eval_node(*e.children[i], opt);
        // A zero-qubit factor is a scalar; broadcast it.
        if (acc.dim() == 1) {
          acc = scale(acc.entry(0, 0), rhs);
        } else if (rhs.dim() == 1) {
          acc = scale(rhs.entry(0, 0), acc);
        } else if (acc.dim() != rhs.dim()) {
          throw eval_error("product: dimension mismatch (" +
                               std::to_string(acc.dim()) + " vs " +
                               std::to_string(rhs.dim()) + ")",
                           e.children[i]->span);
        } else {
          acc = matmul(acc, rhs);
        }
      }
      return acc;
    }
  }
  throw eval_error("unreachable expression kind", e.span);
}

}  // namespace

Gate evaluate(const GateExpr& e, const EvalOptions& options) {
  return eval_node(e, options);
}

}  // namespace hlab
