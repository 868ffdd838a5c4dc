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

// Acceptance suite: every criterion prints one PASS/FAIL line with its
// measured figure and wall time. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ddlab/empirical_bb.hpp"
#include "ddlab/encodings.hpp"
#include "ddlab/noise_models.hpp"
#include "ddlab/process_map.hpp"
#include "ddlab/scenarios.hpp"

using namespace ddlab;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_s,
               const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    auto [o, d] = body();
    ok = o;
    detail = d;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= budget_s) {
    ok = false;
    detail += " [over time budget]";
  }
  std::printf("[%s] criterion %2d: %-28s %s (%.2fs)\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str(), elapsed);
  if (!ok) ++failures;
}

ScenarioResult run(const std::string& scenario, const nlohmann::json& params,
                   std::uint64_t seed) {
  ScenarioConfig config;
  config.scenario = scenario;
  config.params = params;
  config.seed = seed;
  return run_scenario(config);
}

// Independent exhaustive enumeration over the discrete grid (recursion,
// no shared code with solve()).
double exhaustive_best(const BBProblem& p) {
  std::vector<std::pair<std::size_t, double>> choices;
  for (std::size_t f = 0; f < p.family.size(); ++f)
    for (double a : p.family[f].angle_grid) choices.push_back({f, a});
  const std::size_t cap =
      static_cast<std::size_t>(std::floor(1.0 / p.min_spacing_fraction));
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> stack;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!stack.empty()) {
      std::vector<CMat> pulses;
      for (std::size_t i : stack)
        pulses.push_back(
            expm_hamiltonian(p.family[choices[i].first].generator, choices[i].second));
      try {
        const PulseGroup g = close_group(pulses, cap);
        best = std::min(best, distance(chi_tilde(p.chi_bar, g, p.basis), p.chi_hat));
      } catch (const std::runtime_error&) {
      }
    }
    if (stack.size() == p.max_pulses) return;
    for (std::size_t i = start; i < choices.size(); ++i) {
      stack.push_back(i);
      self(self, i);
      stack.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace

int main() {
  std::printf("ddlab acceptance suite\n");

  criterion(1, "leakage-kill exactness", 1.0, [] {
    const auto r = run("dfs_leakage", {{"mode", "algebra"}}, 1);
    const auto& m = r.results.at("metrics");
    const double anti = m.at("max_anticommutator_residual").get<double>();
    const double comm = m.at("collective_z_commutator_norm").get<double>();
    const bool ok = anti < 1e-12 && comm < 1e-12 && m.at("all_leakage_anticommute").get<bool>();
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max anticommutator %.2e, [U,Sz] %.2e", anti, comm);
    return std::make_pair(ok, std::string(buf));
  });

  criterion(2, "DFS immunity", 5.0, [] {
    double worst = 0;
    for (double g : {2.0, 50.0}) {
      const auto r = run("dfs_leakage",
                         {{"mode", "collective"}, {"g_rad_per_ns", g}, {"n_steps", 1000}}, 2);
      worst = std::max(worst,
                       r.results.at("metrics").at("max_fidelity_deviation").get<double>());
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max |1-F| %.2e over 1000 steps", worst);
    return std::make_pair(worst < 1e-12, std::string(buf));
  });

  criterion(3, "theorem 1 symmetrization", 10.0, [] {
    const auto r = run("theorem1", {{"trials", 50}}, 3);
    const auto& m = r.results.at("metrics");
    const bool ok = m.at("passed").get<bool>() &&
                    m.at("negative_control_fails").get<bool>() &&
                    m.at("max_code_residual").get<double>() < 1e-10 &&
                    m.at("max_leakage_residual").get<double>() < 1e-10;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "code %.2e leak %.2e, control residual %.2f",
                  m.at("max_code_residual").get<double>(),
                  m.at("max_leakage_residual").get<double>(),
                  m.at("negative_control_code_residual").get<double>());
    return std::make_pair(ok, std::string(buf));
  });

  criterion(4, "parity-kick scaling slope", 60.0, [] {
    const auto r = run("parity_kick_scaling", {}, 4);
    const double slope = r.results.at("metrics").at("slope").get<double>();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "slope %.3f", slope);
    return std::make_pair(std::abs(slope - 2.0) <= 0.2, std::string(buf));
  });

  criterion(5, "tomography round trip", 30.0, [] {
    const auto r = run("tomography_roundtrip",
                       {{"channels", 20}, {"states_per_channel", 20}}, 5);
    const auto& m = r.results.at("metrics");
    const double err = m.at("max_action_error").get<double>();
    const double eig = m.at("min_chi_eigenvalue").get<double>();
    const double herm = m.at("max_hermiticity_residual").get<double>();
    char buf[128];
    std::snprintf(buf, sizeof(buf), "action %.2e, min eig %.2e, herm %.2e", err, eig, herm);
    return std::make_pair(err < 1e-10 && eig > -1e-10 && herm < 1e-10, std::string(buf));
  });

  criterion(6, "empirical BB recovery", 120.0, [] {
    const auto r = run("empirical_bb", {{"mode", "loop"}}, 6);
    const auto& m = r.results.at("metrics");
    const double dist = m.at("final_distance").get<double>();
    const auto converged = m.at("converged_round").get<std::size_t>();
    double angle = std::fmod(m.at("found_angle_rad").get<double>(), 2 * M_PI);
    if (angle < 0) angle += 2 * M_PI;
    const bool angle_ok = std::abs(angle - M_PI) < 1e-6;

    // solver equals the exhaustive oracle on the discrete grid
    const CodeSpace code = build_dfs(1);
    BBProblem p;
    p.basis = OperatorBasis::pauli_basis(2);
    p.chi_bar.assign(15, 0.0);
    p.chi_bar[p.basis.index_of("XI") - 1] = -2e-4;
    p.chi_hat.assign(15, 0.0);
    p.max_pulses = 2;
    p.min_spacing_fraction = 0.4;
    PulseFamilyEntry fe;
    fe.name = "xbar";
    fe.generator = code.logical_ops.at("X");
    for (int j = 0; j < 16; ++j) fe.angle_grid.push_back(M_PI * j / 8.0);
    p.family.push_back(fe);
    const BBSolution sol = solve(p, 6);
    const double oracle = exhaustive_best(p);
    const bool oracle_ok = std::abs(sol.distance - oracle) < 1e-12;

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "distance %.2e in round %zu, angle err %.2e, oracle gap %.2e", dist,
                  converged, std::abs(angle - M_PI), std::abs(sol.distance - oracle));
    return std::make_pair(dist < 1e-6 && converged >= 1 && converged <= 3 && angle_ok &&
                              oracle_ok,
                          std::string(buf));
  });

  criterion(7, "QECC hybrid advantage", 120.0, [] {
    const auto r = run("qecc_hybrid", {{"trials", 100}}, 7);
    const auto& m = r.results.at("metrics");
    const double frac = m.at("win_fraction").get<double>();
    const bool excl = m.at("recovery_exclusion_enforced").get<bool>();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "BB wins %.0f%%, exclusion rule %s", 100 * frac,
                  excl ? "enforced" : "missing");
    return std::make_pair(frac >= 0.95 && excl, std::string(buf));
  });

  criterion(8, "dot-budget arithmetic", 1.0, [] {
    const auto lo = run("dot_budget", {{"tau_c_ns", 1.0}, {"gate_time_ps", 50.0}}, 8);
    const auto hi = run("dot_budget", {{"tau_c_ns", 100.0}, {"gate_time_ps", 50.0}}, 8);
    const auto n_lo = lo.results.at("metrics").at("n_pulses").get<long long>();
    const auto n_hi = hi.results.at("metrics").at("n_pulses").get<long long>();
    const double c_lo = lo.results.at("metrics").at("correction").get<double>();
    const double c_hi = hi.results.at("metrics").at("correction").get<double>();
    const bool ok = n_lo == 20 && n_hi == 2000 && std::abs(c_lo - 1e-2) < 1e-15 &&
                    std::abs(c_hi - 1e-6) < 1e-19;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "pulses %lld/%lld, corrections %.1e/%.1e", n_lo, n_hi,
                  c_lo, c_hi);
    return std::make_pair(ok, std::string(buf));
  });

  criterion(9, "chi-tilde/symmetrize consistency", 10.0, [] {
    const auto r = run("empirical_bb", {{"mode", "consistency"}, {"cases", 50}}, 9);
    const double err =
        r.results.at("metrics").at("max_consistency_error").get<double>();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max error %.2e over 50 cases", err);
    return std::make_pair(err < 1e-10, std::string(buf));
  });

  criterion(10, "rerun determinism", 60.0, [] {
    const std::vector<std::pair<std::string, nlohmann::json>> cases = {
        {"parity_kick_scaling", {}},
        {"qecc_hybrid", {{"trials", 10}}},
        {"empirical_bb", {{"mode", "loop"}}},
        {"tomography_roundtrip", {{"channels", 6}}},
        {"dfs_leakage", {{"mode", "leakage"}}},
        {"theorem1", {}},
        {"dot_budget", {}},
    };
    for (const auto& [name, params] : cases) {
      const ScenarioResult a = run(name, params, 10);
      const ScenarioResult b = run(name, params, 10);
      if (a.results.dump() != b.results.dump()) return std::make_pair(false, name + " differs");
      if (a.csvs.size() != b.csvs.size()) return std::make_pair(false, name + " csv set differs");
      for (const auto& [f, content] : a.csvs)
        if (b.csvs.at(f) != content) return std::make_pair(false, name + "/" + f + " differs");
    }
    return std::make_pair(true, std::string("all 7 scenarios byte-identical"));
  });

  std::printf(failures == 0 ? "acceptance: all criteria passed\n"
                            : "acceptance: %d criterion(s) FAILED\n",
              failures);
  return failures;
}
