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

#ifndef DDLAB_DECOUPLING_HPP_
#define DDLAB_DECOUPLING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ddlab/operator_core.hpp"

namespace ddlab {

// Finite set of unitaries closed under multiplication up to global phase.
// Elements are stored phase-canonicalized (first significant entry made
// real positive); phases that are merely relative between subspace blocks
// are preserved, which is what makes encoded-space averaging cancel
// leakage blocks.
struct PulseGroup {
  std::vector<CMat> elements;              // element 0 is the identity
  std::vector<std::size_t> generated_from; // indices of the generators
  bool closed = false;

  std::size_t size() const { return elements.size(); }
};

// Divide out the global phase: the first entry with |x| > 1e-6 * max|.|
// is made real positive.
CMat canonical_phase(const CMat& u);

// Breadth-first closure under multiplication with global-phase
// canonicalization. Throws std::runtime_error("group too large") if the
// closure exceeds max_size.
PulseGroup close_group(const std::vector<CMat>& generators, std::size_t max_size);

// (1/N) sum_k Uk^dag h Uk. Requires a closed group (the average over a
// non-group is not a projection).
CMat symmetrize(const CMat& h, const PulseGroup& g);

// Real orthogonal matrices R^(k) with sum_b R^(k)_ab Kb = Uk^dag Ka Uk.
struct AdjointRep {
  std::size_t dim = 0;                       // d^2
  std::vector<std::vector<double>> matrices; // row-major, one per element
  double max_imag = 0;                       // diagnostics

  double entry(std::size_t k, std::size_t a, std::size_t b) const {
    return matrices[k][a * dim + b];
  }
};

AdjointRep adjoint_rep(const PulseGroup& g, const OperatorBasis& basis);

// Per-error parity-kick classification against a pulse.
struct ParityKickReport {
  enum class Outcome { kAnticommutes, kCommutes, kNeither };
  struct Entry {
    double anticommutator_norm = 0;
    double commutator_norm = 0;
    Outcome outcome = Outcome::kNeither;
  };
  std::vector<Entry> entries;

  bool all_anticommute() const;
  double max_anticommutator_norm() const;
};

ParityKickReport parity_kick_check(const std::vector<CMat>& errors, const CMat& pulse,
                                   double tol = kDefaultTol);

// One decoupling cycle: for each group element k in order, {apply Uk,
// free-evolve delta_t, apply Uk^dag}. Identity pulses are omitted. The
// parity kick {free, U, free, U^dag} is the N=2 case.
struct CycleSchedule {
  struct Step {
    enum class Kind { kFree, kPulse };
    Kind kind = Kind::kFree;
    double duration = 0;        // seconds (free segments and pulse widths)
    std::size_t pulse_index = 0;
    bool inverse = false;
  };

  double delta_t = 0;      // free-evolution segment length, seconds
  double pulse_width = 0;  // 0 = ideal (instantaneous) pulses
  std::vector<Step> steps;

  double cycle_time() const;  // sum of free segments and pulse widths
  static CycleSchedule symmetrization(std::size_t group_size, double delta_t,
                                      double pulse_width = 0);
};

struct Trajectory {
  std::vector<double> times;
  std::vector<CMat> states;  // joint density matrices, sampled per cycle
};

// Evolves rho0 on system (x) bath through n_cycles of the schedule. Pulses
// are group elements lifted as (U_sys (x) I_bath); finite-width pulses
// evolve under h_total + h_pulse/width for the width window, where
// exp(-i h_pulse) equals the ideal pulse (pulse_generators, one per group
// element, required when pulse_width > 0).
Trajectory simulate_cycle(const CMat& h_total, const CycleSchedule& schedule,
                          const PulseGroup& g, const CMat& rho0, std::size_t n_cycles,
                          const std::vector<CMat>* pulse_generators = nullptr);

// Trace out a bath appended as the trailing tensor factor.
CMat partial_trace_bath(const CMat& rho_joint, std::size_t system_dim);

// <psi| rho |psi> for a pure target.
double fidelity(const CMat& rho, const CVec& psi);

// Log-log fit of storage infidelity vs cycle time T_c over a delta_t
// sweep at fixed total evolution time: for each delta_t, run
// round(total_time / T_c) cycles and compare the reduced system state
// against the frozen storage target (the ideally decoupled evolution).
struct ScalingFit {
  double slope = 0;
  double fit_residual = 0;
  std::vector<double> cycle_times;
  std::vector<double> infidelities;
  bool degenerate = false;      // all infidelities at noise floor
  bool suppressed = true;       // false when infidelity fails to shrink with T_c
  bool monotone = true;
};

ScalingFit scaling_exponent(const CMat& h_total, const std::vector<double>& delta_ts,
                            const PulseGroup& g, const CMat& rho0,
                            const CVec& system_target, double total_time,
                            double pulse_width = 0);

}  // namespace ddlab

#endif  // DDLAB_DECOUPLING_HPP_
