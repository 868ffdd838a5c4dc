// Copyright 2026 The ddlab Authors
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

// Batch front end: `ddlab run <config.json>` executes one scenario and
// writes results.json plus one CSV per curve; `ddlab list-scenarios`
// prints the registry. Identical config + seed produces byte-identical
// outputs.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ddlab/scenarios.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dynamical-decoupling laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::int64_t seed_override = -1;
  auto* run = app.add_subcommand("run", "run a scenario from a JSON config");
  run->add_option("config", config_path, "path to the config file")->required();
  run->add_option("--seed", seed_override, "override the config seed");
  run->add_option("--out", out_dir, "override the output directory");

  auto* list = app.add_subcommand("list-scenarios", "list scenarios and their params");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  if (list->parsed()) {
    std::cout << ddlab::list_scenarios_text();
    return 0;
  }

  ddlab::ScenarioConfig config;
  try {
    config = ddlab::parse_config_file(config_path);
  } catch (const ddlab::ConfigError& e) {
    std::cerr << config_path << ":" << e.line << ": " << e.what() << '\n';
    return 2;
  }
  if (seed_override >= 0) config.seed = static_cast<std::uint64_t>(seed_override);
  if (!out_dir.empty()) config.output_dir = out_dir;

  try {
    const ddlab::ScenarioResult result = ddlab::run_scenario(config);
    ddlab::write_outputs(result, config.output_dir);
    std::cout << "wrote " << (std::filesystem::path(config.output_dir) / "results.json").string()
              << '\n';
    return 0;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["scenario"] = config.scenario;
    err["seed"] = config.seed;
    err["params"] = config.params;
    err["error"] = e.what();
    std::filesystem::create_directories(config.output_dir);
    std::ofstream out(std::filesystem::path(config.output_dir) / "results.json",
                      std::ios::binary);
    out << err.dump(2) << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
