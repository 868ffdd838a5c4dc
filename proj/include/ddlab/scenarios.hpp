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

#ifndef DDLAB_SCENARIOS_HPP_
#define DDLAB_SCENARIOS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ddlab {

// Parse error with a line anchor into the config text.
struct ConfigError : std::runtime_error {
  ConfigError(std::string msg, int line_number)
      : std::runtime_error(std::move(msg)), line(line_number) {}
  int line = 0;
};

// One batch run: named scenario, scenario-specific params (physical
// quantities carry unit suffixes: _ns, _ps, _rad), seed, output dir.
struct ScenarioConfig {
  std::string scenario;
  nlohmann::json params;  // object; defaults filled by the handler
  std::uint64_t seed = 0;
  std::string output_dir = ".";
};

ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig parse_config_file(const std::string& path);

struct ScenarioResult {
  nlohmann::json results;                   // results.json content
  std::map<std::string, std::string> csvs;  // filename -> content
};

// Executes the scenario; throws std::invalid_argument / std::runtime_error
// for runtime failures (the CLI maps those to exit code 1).
ScenarioResult run_scenario(const ScenarioConfig& config);

// Writes results.json and the CSVs into output_dir.
void write_outputs(const ScenarioResult& result, const std::string& output_dir);

std::string list_scenarios_text();
const std::vector<std::string>& scenario_names();

}  // namespace ddlab

#endif  // DDLAB_SCENARIOS_HPP_
