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

#include <iosfwd>
#include <string>
#include <vector>

namespace hlab {

/**
 * Runs one CLI command (the binary is a thin wrapper around this).
 * `args` excludes the program name. Gate input comes from a positional
 * expression or, with --from-json, as the gate wire format on `in`.
 *
 * Exit status: 0 on success, 1 when a verification suite reports
 * failures, 2 on usage, parse, evaluation or resource errors. In JSON
 * mode errors are emitted as a machine-readable object on `out`.
 */
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace hlab
