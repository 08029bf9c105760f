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

#include <memory>
#include <string_view>

#include "hlab/gate.hpp"

namespace hlab {

struct SourceSpan {
  int begin = 0;
  int end = 0;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, int position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  int position() const { return position_; }

 private:
  int position_;
};

class eval_error : public std::runtime_error {
 public:
  eval_error(const std::string& message, SourceSpan span)
      : std::runtime_error(message + " (at positions " + std::to_string(span.begin) +
                           ".." + std::to_string(span.end) + ")"),
        span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

/**
 * Gate expression AST. Grammar (whitespace insensitive, case sensitive):
 *
 *   expr := term { '*' term }
 *   term := atom | func | '(' expr ')'
 *   atom := I | X | Y | Z | H | S | T | CX | CZ | SWAP
 *   func := C(expr) | kron(expr, expr) | dsum(expr, expr) | dag(expr)
 *         | pow(expr, int) | rot(P, int) | phase(int) | id(int)
 *
 * `A*B` is the matrix product A.B. rot(P, k) is exp(i*pi*P/2^k) with
 * P in {X, Y, Z} and k >= 1; it widens the ring to order k+1 on demand.
 * phase(j) is the scalar zeta^j (a zero-qubit gate; `*` broadcasts it).
 */
struct GateExpr {
  enum class Kind { Atom, Controlled, Kron, DSum, Dag, Pow, Rot, Phase, Id, Product };

  Kind kind = Kind::Atom;
  std::string atom;                                      // Kind::Atom
  std::vector<std::shared_ptr<const GateExpr>> children; // operands
  long long int_arg = 0;                                 // pow/rot/phase/id argument
  char pauli_arg = 0;                                    // rot axis
  SourceSpan span;
};

using ExprPtr = std::shared_ptr<const GateExpr>;

ExprPtr parse_expr(std::string_view text);

/// Canonical text form; parsing it back yields an equal AST.
std::string pretty_print(const GateExpr& e);

bool expr_equal(const GateExpr& a, const GateExpr& b);

struct EvalOptions {
  int cyc_order_log2 = CycEntry::kDefaultOrderLog2;
  int max_qubits = 6;
};

/// Evaluates to an exact unitary gate. Dimension conflicts surface as
/// eval_error carrying the offending node's source span.
Gate evaluate(const GateExpr& e, const EvalOptions& options = {});

}  // namespace hlab
