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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddlab/scenarios.hpp"

using namespace ddlab;

TEST_CASE("config parsing") {
  const auto config = parse_config_text(
      R"({"scenario":"dot_budget","params":{"tau_c_ns":1.0},"seed":3,"output_dir":"x"})");
  CHECK(config.scenario == "dot_budget");
  CHECK(config.seed == 3);
  CHECK(config.output_dir == "x");

  CHECK_THROWS_AS(parse_config_text("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"scenario":"nope"})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"params":{}})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"scenario":"dot_budget","params":3})"), ConfigError);

  // line anchoring: error on the offending line
  try {
    parse_config_text("{\n  \"scenario\": \"dot_budget\",\n  oops\n}");
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("scenario registry lists exactly the seven scenarios") {
  const auto& names = scenario_names();
  CHECK(names.size() == 7);
  const std::string listing = list_scenarios_text();
  for (const char* expected :
       {"dfs_leakage", "parity_kick_scaling", "theorem1", "qecc_hybrid", "empirical_bb",
        "dot_budget", "tomography_roundtrip"}) {
    CAPTURE(expected);
    CHECK(listing.find(expected) != std::string::npos);
    bool found = false;
    for (const auto& n : names) found = found || n == expected;
    CHECK(found);
  }
}

TEST_CASE("dot_budget scenario metrics") {
  ScenarioConfig config;
  config.scenario = "dot_budget";
  config.params = nlohmann::json{{"tau_c_ns", 1.0}, {"gate_time_ps", 50.0}};
  config.seed = 1;
  const ScenarioResult r = run_scenario(config);
  CHECK(r.results.at("metrics").at("n_pulses").get<long long>() == 20);
  CHECK(r.results.at("metrics").at("correction").get<double>() ==
        doctest::Approx(1e-2).epsilon(1e-12));
  CHECK(r.results.at("scenario") == "dot_budget");
  CHECK(r.results.contains("warnings"));
}

TEST_CASE("identical config and seed reproduce byte-identical outputs") {
  for (const char* text :
       {R"({"scenario":"parity_kick_scaling","params":{},"seed":11})",
        R"({"scenario":"qecc_hybrid","params":{"trials":5},"seed":11})",
        R"({"scenario":"tomography_roundtrip","params":{"channels":4},"seed":11})",
        R"({"scenario":"empirical_bb","params":{"mode":"loop"},"seed":11})"}) {
    CAPTURE(text);
    const ScenarioConfig config = parse_config_text(text);
    const ScenarioResult a = run_scenario(config);
    const ScenarioResult b = run_scenario(config);
    CHECK(a.results.dump() == b.results.dump());
    REQUIRE(a.csvs.size() == b.csvs.size());
    for (const auto& [name, content] : a.csvs) CHECK(b.csvs.at(name) == content);
  }
}

TEST_CASE("seeds change stochastic outputs") {
  ScenarioConfig config = parse_config_text(
      R"({"scenario":"qecc_hybrid","params":{"trials":3},"seed":1})");
  const ScenarioResult a = run_scenario(config);
  config.seed = 2;
  const ScenarioResult b = run_scenario(config);
  CHECK(a.csvs.at("qecc_trials.csv") != b.csvs.at("qecc_trials.csv"));
}

TEST_CASE("csv output format") {
  const ScenarioConfig config =
      parse_config_text(R"({"scenario":"parity_kick_scaling","params":{},"seed":5})");
  const ScenarioResult r = run_scenario(config);
  const std::string& csv = r.csvs.at("scaling.csv");
  CHECK(csv.substr(0, csv.find('\n')) == "delta_t_ns,cycle_time_ns,infidelity");
  CHECK(csv.back() == '\n');
  CHECK(csv.find(',') != std::string::npos);
  // decimal point radix, never comma-decimal
  CHECK(csv.find("e-") != std::string::npos);
}

TEST_CASE("unknown scenario and bad mode are rejected") {
  ScenarioConfig config;
  config.scenario = "unknown_thing";
  CHECK_THROWS_AS(run_scenario(config), std::invalid_argument);

  config.scenario = "dfs_leakage";
  config.params = nlohmann::json{{"mode", "bogus"}};
  CHECK_THROWS_AS(run_scenario(config), std::invalid_argument);
}
