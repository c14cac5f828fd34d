/*
 * Copyright 2026 The hamsym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HAMSYM_CLI_HPP
#define HAMSYM_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamsym/hamming.hpp"

namespace hamsym::cli {

enum class Command { classify, certify, spectrum, theta, scheme_check, kraw_check, sweep };

Command command_from_name(const std::string& name);
std::string command_name(Command c);

struct RunConfig {
    Command command = Command::classify;
    int q = 2, n = 2, d = 2;
    Variant variant = Variant::gilbert;
    std::string format = "json";  // json | table
    long long vertex_cap = kDefaultVertexCap;
    bool with_sdp = false;
    bool with_alpha = false;
    bool with_maxcut = false;
    std::optional<std::vector<int>> modulus;  // comma-separated on the CLI, constant term first
    std::string out_path;                     // empty: stdout
    std::string export_graph_path;            // empty: no DIMACS export
};

/// Parses "1,1,1" into {1,1,1} (constant term first).
std::vector<int> parse_modulus(const std::string& text);

/// Executes the command and writes the report to os (or to out_path when
/// set). Exit codes: 0 success, 1 usage/validation error, 2 internal
/// assertion failure (a theorem-contradiction sentinel that should never
/// occur).
int run(const RunConfig& config, std::ostream& os);

}  // namespace hamsym::cli

#endif  // HAMSYM_CLI_HPP
