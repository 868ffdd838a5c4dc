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

#ifndef DDLAB_EMPIRICAL_BB_HPP_
#define DDLAB_EMPIRICAL_BB_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ddlab/decoupling.hpp"
#include "ddlab/process_map.hpp"

namespace ddlab {

// One pulsable control direction: a Hermitian generator and its allowed
// angles. An empty angle_grid means a continuous interval [angle_lo,
// angle_hi] searched by derivative-free local descent.
struct PulseFamilyEntry {
  std::string name;
  CMat generator;
  std::vector<double> angle_grid;  // radians; empty => continuous
  double angle_lo = 0;
  double angle_hi = 6.283185307179586;
};

struct BBProblem {
  std::vector<double> chi_bar;  // measured, indexed alpha-1 for alpha >= 1
  std::vector<double> chi_hat;  // target (all-zero for storage)
  std::vector<PulseFamilyEntry> family;
  std::size_t max_pulses = 1;
  // Minimum pulse spacing as a fraction of tau_c; the closed group must
  // fit its cycle inside tau_c, i.e. group size <= floor(1/fraction).
  double min_spacing_fraction = 0;
  OperatorBasis basis;
};

struct PulseChoice {
  std::size_t family_index = 0;
  double angle = 0;  // radians
};

struct BBSolution {
  PulseGroup pulses;               // closed group realizing the solution
  std::vector<PulseChoice> specs;  // generating pulses as chosen
  std::vector<double> chi_tilde;
  double distance = 0;
  std::size_t iterations = 0;  // candidates / objective evaluations
};

// Eq-(9) transformation: chi_tilde_b = (1/N) sum_k sum_{a>=1} chi_bar_a R^(k)_ab.
std::vector<double> chi_tilde(const std::vector<double>& chi_bar, const PulseGroup& g,
                              const OperatorBasis& basis);

// Euclidean distance between coefficient vectors.
double distance(const std::vector<double>& a, const std::vector<double>& b);

// Searches pulse multisets of size <= max_pulses whose closure is feasible
// under the spacing constraint; exhaustive when every family entry has a
// finite grid and the candidate count stays under 1e5, otherwise
// Nelder-Mead over continuous angles with 10 seeded restarts. Ties break
// to fewer pulses, then the lexicographically smallest (family, angle)
// tuple. Non-convergence is not an error; the best found is returned.
BBSolution solve(const BBProblem& problem, std::uint64_t seed);

// Black-box plant: rho after free evolution for time t.
using PlantFamily = std::function<CMat(double t, const CMat& rho)>;

struct ControlLoopConfig {
  BBProblem problem;               // chi_bar is measured, not taken from here
  std::vector<double> tau_points;  // tomography times per round
  std::size_t rounds = 1;
  double sigma = 0;                // shot noise on superoperator entries
  std::uint64_t seed = 0;
};

struct ControlLoopResult {
  BBSolution solution;                // cumulative pulse set after the loop
  std::vector<double> distance_trace; // per-round residual distance
  std::vector<PulseChoice> history;   // pulses accumulated round by round
};

// Closed loop: each round performs tomography of the plant dressed by the
// current pulse cycle, extracts the short-time generator, solves for
// corrective pulses, and composes them into the pulse set.
ControlLoopResult control_loop(const PlantFamily& plant, const ControlLoopConfig& config);

// JSON serialization for the CLI (angles in radians, generators as
// Pauli-expansion coefficient lists).
std::string bb_problem_to_json(const BBProblem& p);
BBProblem bb_problem_from_json(const std::string& text);
std::string bb_solution_to_json(const BBSolution& s, const OperatorBasis& basis);

}  // namespace ddlab

#endif  // DDLAB_EMPIRICAL_BB_HPP_
