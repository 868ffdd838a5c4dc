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

#ifndef DDLAB_NOISE_MODELS_HPP_
#define DDLAB_NOISE_MODELS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ddlab/process_map.hpp"

namespace ddlab {

enum class NoiseKind {
  kCollectiveDephasing,
  kSpinBath,
  kStochasticDephasing,
  kAnalyticEnvelope,
};

std::string to_string(NoiseKind k);
NoiseKind noise_kind_from_string(const std::string& s);

// Parameterized system-bath scenario. tau_c is the bath correlation time
// (inverse spectral-density high-frequency cutoff), g the coupling in
// rad/s. T2 and tau_c are tied by T2 = c_of_T * tau_c.
struct NoiseScenario {
  NoiseKind kind = NoiseKind::kCollectiveDephasing;
  double tau_c = 0;       // seconds
  double g = 0;           // rad/s
  int n_bath_qubits = 1;  // spin_bath only, <= 3
  double c_of_T = 1;
  std::uint64_t seed = 0;
};

std::string noise_scenario_to_json(const NoiseScenario& s);
NoiseScenario noise_scenario_from_json(const std::string& text);

struct JointHamiltonian {
  CMat h;
  std::size_t system_dim = 0;
  std::size_t bath_dim = 0;
};

// Classical Ornstein-Uhlenbeck frequency noise per qubit: stationary
// std g, correlation time tau_c; exact discretization.
struct OuDephasingModel {
  double tau_c = 0;
  double sigma = 0;  // stationary standard deviation (= scenario g)
  std::size_t n_qubits = 1;
  std::uint64_t seed = 0;

  // One frequency trajectory sampled at n_steps+1 points spaced dt.
  std::vector<double> trajectory(double dt, std::size_t n_steps, std::uint64_t traj_seed) const;
};

// Dephasing channel with coherence envelope 1/(1 + (t/tau_c)^2).
struct AnalyticEnvelopeModel {
  double tau_c = 0;

  double coherence(double t) const { return 1.0 / (1.0 + (t / tau_c) * (t / tau_c)); }
  Channel channel(double t) const;  // single qubit
};

using NoiseModel = std::variant<JointHamiltonian, OuDephasingModel, AnalyticEnvelopeModel>;

// collective_dephasing -> g * (sum_i Z_i) (x) B_z (B_z = bath X, 1 qubit);
// spin_bath           -> sum_i g u_i Z_i (x) P_i + I (x) H_bath, couplings
//                        u_i ~ U[-1,1] seeded, H_bath seeded random Hermitian
//                        rescaled so its spectral spread is exactly 1/tau_c;
// stochastic_dephasing -> OuDephasingModel;
// analytic_envelope    -> AnalyticEnvelopeModel.
NoiseModel build_noise_model(const NoiseScenario& s, std::size_t n_system_qubits);

// Convenience for the Hamiltonian kinds; throws for trajectory kinds.
JointHamiltonian build_joint_hamiltonian(const NoiseScenario& s, std::size_t n_system_qubits);

// Half-decay T2: evolve the probe coherence <0|rho(t)|1> on the grid and
// return the first time |coherence| falls to half its initial value
// (linear interpolation between grid points). Stochastic kinds average
// n_trajectories (must be >= 100). Throws "grid too short" if the
// coherence never reaches half within the grid.
double estimate_t2(const NoiseScenario& s, const CVec& probe,
                   const std::vector<double>& t_grid, std::size_t n_trajectories = 200);

// Quantum-dot pulse-budget arithmetic: tau_c = T2 / c_of_T,
// n_pulses = floor(tau_c / gate_time), correction = (T_c/tau_c)^2 with
// T_c = 2 * gate_time.
struct DotBudget {
  double t2 = 0;
  double gate_time = 0;
  double c_of_T = 1;
  double tau_c = 0;
  long long n_pulses = 0;
  double correction = 0;
};

DotBudget dot_budget(double t2, double gate_time, double c_of_T = 1);

}  // namespace ddlab

#endif  // DDLAB_NOISE_MODELS_HPP_
