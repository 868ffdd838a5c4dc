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

#include "ddlab/decoupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ddlab/eig.hpp"

namespace ddlab {

CMat canonical_phase(const CMat& u) {
  const double scale = u.max_abs();
  if (scale == 0) return u;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const cplx x = u.data()[i];
    if (std::abs(x) > 1e-6 * scale) {
      CMat out = u;
      out *= std::abs(x) / x;
      return out;
    }
  }
  return u;
}

namespace {

bool same_up_to_nothing(const CMat& a, const CMat& b) {
  return max_abs_diff(a, b) < 1e-8;
}

// Index of u in the (canonicalized) element list, or npos.
std::size_t find_element(const std::vector<CMat>& els, const CMat& u) {
  for (std::size_t i = 0; i < els.size(); ++i)
    if (same_up_to_nothing(els[i], u)) return i;
  return static_cast<std::size_t>(-1);
}

}  // namespace

PulseGroup close_group(const std::vector<CMat>& generators, std::size_t max_size) {
  if (max_size < 1) throw std::invalid_argument("close_group: max_size must be >= 1");
  if (generators.empty()) throw std::invalid_argument("close_group: no generators");
  const std::size_t d = generators.front().rows();
  for (const auto& g : generators)
    if (!is_unitary(g, 1e-8))
      throw std::invalid_argument("close_group: generator is not unitary");

  PulseGroup group;
  group.elements.push_back(canonical_phase(CMat::identity(d)));
  for (const auto& g : generators) {
    CMat c = canonical_phase(g);
    if (find_element(group.elements, c) == static_cast<std::size_t>(-1)) {
      group.elements.push_back(std::move(c));
      group.generated_from.push_back(group.elements.size() - 1);
    }
  }

  // Fixpoint iteration: multiply new elements against everything seen so
  // far (both orders) until no products are new.
  auto add_if_new = [&](CMat p) {
    if (find_element(group.elements, p) != static_cast<std::size_t>(-1)) return;
    if (group.elements.size() >= max_size) throw std::runtime_error("group too large");
    group.elements.push_back(std::move(p));
  };
  std::size_t frontier = 0;
  while (frontier < group.elements.size()) {
    const std::size_t upto = group.elements.size();
    for (std::size_t i = frontier; i < upto; ++i) {
      for (std::size_t j = 0; j < upto; ++j) {
        add_if_new(canonical_phase(group.elements[i] * group.elements[j]));
        add_if_new(canonical_phase(group.elements[j] * group.elements[i]));
      }
    }
    frontier = upto;
  }
  group.closed = true;
  return group;
}

CMat symmetrize(const CMat& h, const PulseGroup& g) {
  if (!g.closed) throw std::invalid_argument("symmetrize: group is not closed");
  if (g.elements.empty() || g.elements.front().rows() != h.rows() || !h.is_square())
    throw std::invalid_argument("symmetrize: dimension mismatch");
  CMat acc(h.rows(), h.cols());
  for (const auto& u : g.elements) acc += conjugate_by_adjoint(u, h);
  acc *= cplx(1.0 / static_cast<double>(g.size()), 0);
  return acc;
}

AdjointRep adjoint_rep(const PulseGroup& g, const OperatorBasis& basis) {
  if (g.elements.empty() || g.elements.front().rows() != basis.dim())
    throw std::invalid_argument("adjoint_rep: dimension mismatch");
  const std::size_t n2 = basis.size();
  const double d = static_cast<double>(basis.dim());
  AdjointRep rep;
  rep.dim = n2;
  rep.matrices.reserve(g.size());
  for (const auto& u : g.elements) {
    std::vector<double> r(n2 * n2);
    for (std::size_t a = 0; a < n2; ++a) {
      const CMat conj_a = conjugate_by_adjoint(u, basis.element(a));
      for (std::size_t b = 0; b < n2; ++b) {
        const cplx v = basis.element(b).hs_dot(conj_a) / d;
        r[a * n2 + b] = v.real();
        rep.max_imag = std::max(rep.max_imag, std::abs(v.imag()));
      }
    }
    rep.matrices.push_back(std::move(r));
  }
  return rep;
}

bool ParityKickReport::all_anticommute() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) {
    return e.outcome == Outcome::kAnticommutes;
  });
}

double ParityKickReport::max_anticommutator_norm() const {
  double m = 0;
  for (const auto& e : entries) m = std::max(m, e.anticommutator_norm);
  return m;
}

ParityKickReport parity_kick_check(const std::vector<CMat>& errors, const CMat& pulse,
                                   double tol) {
  ParityKickReport report;
  report.entries.reserve(errors.size());
  for (const auto& e : errors) {
    if (e.rows() != pulse.rows())
      throw std::invalid_argument("parity_kick_check: dimension mismatch");
    ParityKickReport::Entry entry;
    entry.anticommutator_norm = anticommutator(e, pulse).max_abs();
    entry.commutator_norm = commutator(e, pulse).max_abs();
    if (entry.anticommutator_norm < tol)
      entry.outcome = ParityKickReport::Outcome::kAnticommutes;
    else if (entry.commutator_norm < tol)
      entry.outcome = ParityKickReport::Outcome::kCommutes;
    report.entries.push_back(entry);
  }
  return report;
}

double CycleSchedule::cycle_time() const {
  double t = 0;
  for (const auto& s : steps) t += s.duration;
  return t;
}

CycleSchedule CycleSchedule::symmetrization(std::size_t group_size, double delta_t,
                                            double pulse_width) {
  if (delta_t <= 0) throw std::invalid_argument("CycleSchedule: delta_t must be > 0");
  CycleSchedule sched;
  sched.delta_t = delta_t;
  sched.pulse_width = pulse_width;
  for (std::size_t k = 0; k < group_size; ++k) {
    if (k != 0)  // element 0 is the identity; pulsing it is a no-op
      sched.steps.push_back({Step::Kind::kPulse, pulse_width, k, false});
    sched.steps.push_back({Step::Kind::kFree, delta_t, 0, false});
    if (k != 0)
      sched.steps.push_back({Step::Kind::kPulse, pulse_width, k, true});
  }
  return sched;
}

namespace {

CMat lift_to_joint(const CMat& u_sys, std::size_t bath_dim) {
  return bath_dim == 1 ? u_sys : u_sys.kron(CMat::identity(bath_dim));
}

}  // namespace

Trajectory simulate_cycle(const CMat& h_total, const CycleSchedule& schedule,
                          const PulseGroup& g, const CMat& rho0, std::size_t n_cycles,
                          const std::vector<CMat>* pulse_generators) {
  if (schedule.delta_t <= 0) throw std::invalid_argument("simulate_cycle: delta_t must be > 0");
  const std::size_t joint_dim = h_total.rows();
  const std::size_t sys_dim = g.elements.empty() ? joint_dim : g.elements.front().rows();
  if (joint_dim % sys_dim != 0)
    throw std::invalid_argument("simulate_cycle: bath dimension is not integral");
  const std::size_t bath_dim = joint_dim / sys_dim;
  if (rho0.rows() != joint_dim) throw std::invalid_argument("simulate_cycle: rho0 dimension");

  // Build the cycle unitary once; everything up to sampling is unitary.
  CMat cycle = CMat::identity(joint_dim);
  CMat free_u = expm_hermitian(h_total, schedule.delta_t);
  for (const auto& step : schedule.steps) {
    CMat step_u(0, 0);
    if (step.kind == CycleSchedule::Step::Kind::kFree) {
      step_u = (step.duration == schedule.delta_t) ? free_u
                                                   : expm_hermitian(h_total, step.duration);
    } else {
      if (step.pulse_index >= g.size())
        throw std::invalid_argument("simulate_cycle: schedule references pulse outside group");
      if (schedule.pulse_width <= 0) {
        CMat u = lift_to_joint(g.elements[step.pulse_index], bath_dim);
        step_u = step.inverse ? u.adjoint() : u;
      } else {
        if (!pulse_generators || pulse_generators->size() != g.size())
          throw std::invalid_argument(
              "simulate_cycle: finite pulse width requires one generator per group element");
        CMat gen = (*pulse_generators)[step.pulse_index];
        if (step.inverse) gen *= cplx(-1, 0);
        // exp(-i (h_total + h_pulse/width) * width)
        CMat h_eff = h_total;
        kernels::active().axpy(h_eff.data(), cplx(1.0 / schedule.pulse_width, 0),
                               lift_to_joint(gen, bath_dim).data(), h_eff.size());
        step_u = expm_hermitian(h_eff, schedule.pulse_width);
      }
    }
    cycle = step_u * cycle;  // later steps act on the left
  }

  Trajectory traj;
  traj.times.reserve(n_cycles + 1);
  traj.states.reserve(n_cycles + 1);
  const double t_c = schedule.cycle_time();
  traj.times.push_back(0);
  traj.states.push_back(rho0);
  CMat rho = rho0;
  for (std::size_t c = 1; c <= n_cycles; ++c) {
    rho = conjugate_by(cycle, rho);
    traj.times.push_back(static_cast<double>(c) * t_c);
    traj.states.push_back(rho);
  }
  return traj;
}

CMat partial_trace_bath(const CMat& rho_joint, std::size_t system_dim) {
  const std::size_t joint = rho_joint.rows();
  if (joint % system_dim != 0)
    throw std::invalid_argument("partial_trace_bath: dimension mismatch");
  const std::size_t bath = joint / system_dim;
  CMat out(system_dim, system_dim);
  for (std::size_t i = 0; i < system_dim; ++i)
    for (std::size_t j = 0; j < system_dim; ++j) {
      cplx acc = 0;
      for (std::size_t b = 0; b < bath; ++b) acc += rho_joint(i * bath + b, j * bath + b);
      out(i, j) = acc;
    }
  return out;
}

double fidelity(const CMat& rho, const CVec& psi) {
  if (rho.rows() != psi.size()) throw std::invalid_argument("fidelity: dimension mismatch");
  cplx acc = 0;
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j)
      acc += std::conj(psi[i]) * rho(i, j) * psi[j];
  return acc.real();
}

ScalingFit scaling_exponent(const CMat& h_total, const std::vector<double>& delta_ts,
                            const PulseGroup& g, const CMat& rho0,
                            const CVec& system_target, double total_time,
                            double pulse_width) {
  if (delta_ts.size() < 4)
    throw std::invalid_argument("scaling_exponent: need >= 4 delta_t values");
  const auto [lo, hi] = std::minmax_element(delta_ts.begin(), delta_ts.end());
  if (*hi / *lo < 10.0)
    throw std::invalid_argument("scaling_exponent: delta_t sweep must span >= 1 decade");

  ScalingFit fit;
  const std::size_t sys_dim = g.elements.front().rows();
  for (double dt : delta_ts) {
    CycleSchedule sched = CycleSchedule::symmetrization(g.size(), dt, pulse_width);
    const double t_c = sched.cycle_time();
    const auto n_cycles = static_cast<std::size_t>(std::llround(total_time / t_c));
    if (n_cycles == 0) throw std::invalid_argument("scaling_exponent: total_time too short");
    Trajectory traj = simulate_cycle(h_total, sched, g, rho0, n_cycles);
    const CMat sys = partial_trace_bath(traj.states.back(), sys_dim);
    fit.cycle_times.push_back(t_c);
    fit.infidelities.push_back(std::max(1.0 - fidelity(sys, system_target), 0.0));
  }

  const double floor_level = 1e-13;
  fit.degenerate = std::all_of(fit.infidelities.begin(), fit.infidelities.end(),
                               [&](double v) { return v < floor_level; });
  if (fit.degenerate) {
    fit.slope = 0;
    fit.suppressed = true;
    return fit;
  }

  // least squares on log-log
  const std::size_t n = fit.cycle_times.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = std::log(fit.cycle_times[i]);
    ys[i] = std::log(std::max(fit.infidelities[i], 1e-300));
    sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
  }
  const double nn = static_cast<double>(n);
  fit.slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
  const double intercept = (sy - fit.slope * sx) / nn;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + intercept);
    fit.fit_residual = std::max(fit.fit_residual, std::abs(r));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool increasing_tc = fit.cycle_times[i + 1] > fit.cycle_times[i];
    const bool increasing_inf = fit.infidelities[i + 1] > fit.infidelities[i];
    if (increasing_tc != increasing_inf &&
        std::abs(fit.infidelities[i + 1] - fit.infidelities[i]) >
            0.05 * std::max(fit.infidelities[i + 1], fit.infidelities[i]))
      fit.monotone = false;
  }
  fit.suppressed = fit.slope > 0.5;
  return fit;
}

}  // namespace ddlab
