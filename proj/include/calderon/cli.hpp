// Copyright 2026 The Calderon Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CALDERON_CLI_HPP_
#define CALDERON_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace calderon::cli {

enum class Command { kForward, kReconstruct, kStability, kOracleCheck, kConformal, kWitness };

std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command c);

struct RunConfig {
  Command command = Command::kForward;
  int K = 4;
  int J = 12;
  int M = 64;
  int quad_nr = 128;
  int quad_ntheta = 256;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  // Coefficient or matrix file. When empty, commands that take coefficients
  // draw a random perturbation in W_K (|j| <= J) from `seed`.
  std::string input;
  std::string output;
  std::string map_spec;
  int threads = 1;
};

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitIo = 2;

// Runs one command. Writes `output` plus the plot CSV `output + ".csv"` (and
// for reconstruct also `output + ".amplification.csv"`). Failures print one
// line "error: <kind>: <message>" to `err`.
int run(const RunConfig& config, std::ostream& err);

}  // namespace calderon::cli

#endif  // CALDERON_CLI_HPP_
