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

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "calderon/cli.hpp"

int main(int argc, char** argv) {
  using calderon::cli::RunConfig;
  RunConfig cfg;
  std::string command;

  CLI::App app{"Linearised Calderon problem on the unit disk"};
  app.add_option("--command", command,
                 "forward | reconstruct | stability | oracle-check | conformal | witness")
      ->required();
  app.add_option("--input", cfg.input, "coefficient JSON (matrix JSON for reconstruct)");
  app.add_option("--output", cfg.output, "output file; plot CSV goes to <output>.csv")->required();
  app.add_option("--K", cfg.K, "maximum layer k")->capture_default_str();
  app.add_option("--J", cfg.J, "maximum |j|")->capture_default_str();
  app.add_option("--M", cfg.M, "matrix truncation on |m|, |n|")->capture_default_str();
  app.add_option("--nr", cfg.quad_nr, "radial quadrature nodes")->capture_default_str();
  app.add_option("--ntheta", cfg.quad_ntheta, "angular quadrature nodes")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for generated perturbations")->capture_default_str();
  app.add_option("--tol", cfg.tol, "pass threshold for oracle-check")->capture_default_str();
  app.add_option("--map-spec", cfg.map_spec, "conformal map JSON (conformal command)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: precondition: " << e.what() << "\n";
    return calderon::cli::kExitPrecondition;
  }

  const auto parsed = calderon::cli::parse_command(command);
  if (!parsed) {
    std::cerr << "error: precondition: unknown command \"" << command << "\"\n";
    return calderon::cli::kExitPrecondition;
  }
  cfg.command = *parsed;

  cfg.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("CALDERON_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit >= 1) cfg.threads = std::min(cfg.threads, limit);
  }

  return calderon::cli::run(cfg, std::cerr);
}
