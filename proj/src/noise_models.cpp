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

#include "ddlab/noise_models.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ddlab/decoupling.hpp"
#include "ddlab/eig.hpp"

namespace ddlab {

std::string to_string(NoiseKind k) {
  switch (k) {
    case NoiseKind::kCollectiveDephasing: return "collective_dephasing";
    case NoiseKind::kSpinBath: return "spin_bath";
    case NoiseKind::kStochasticDephasing: return "stochastic_dephasing";
    case NoiseKind::kAnalyticEnvelope: return "analytic_envelope";
  }
  throw std::invalid_argument("to_string(NoiseKind): bad enum");
}

NoiseKind noise_kind_from_string(const std::string& s) {
  if (s == "collective_dephasing") return NoiseKind::kCollectiveDephasing;
  if (s == "spin_bath") return NoiseKind::kSpinBath;
  if (s == "stochastic_dephasing") return NoiseKind::kStochasticDephasing;
  if (s == "analytic_envelope") return NoiseKind::kAnalyticEnvelope;
  throw std::invalid_argument("unknown noise kind: " + s);
}

std::string noise_scenario_to_json(const NoiseScenario& s) {
  nlohmann::json j;
  j["kind"] = to_string(s.kind);
  j["tau_c_s"] = s.tau_c;
  j["g_rad_per_s"] = s.g;
  j["n_bath_qubits"] = s.n_bath_qubits;
  j["c_of_T"] = s.c_of_T;
  j["seed"] = s.seed;
  return j.dump();
}

NoiseScenario noise_scenario_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  NoiseScenario s;
  s.kind = noise_kind_from_string(j.at("kind").get<std::string>());
  s.tau_c = j.at("tau_c_s").get<double>();
  s.g = j.at("g_rad_per_s").get<double>();
  s.n_bath_qubits = j.value("n_bath_qubits", 1);
  s.c_of_T = j.value("c_of_T", 1.0);
  s.seed = j.value("seed", std::uint64_t(0));
  if (s.tau_c <= 0) throw std::invalid_argument("NoiseScenario: tau_c must be > 0");
  return s;
}

std::vector<double> OuDephasingModel::trajectory(double dt, std::size_t n_steps,
                                                 std::uint64_t traj_seed) const {
  std::mt19937_64 rng(traj_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(n_steps + 1);
  const double decay = std::exp(-dt / tau_c);
  const double kick = sigma * std::sqrt(1.0 - decay * decay);
  x[0] = sigma * gauss(rng);
  for (std::size_t i = 0; i < n_steps; ++i) x[i + 1] = x[i] * decay + kick * gauss(rng);
  return x;
}

Channel AnalyticEnvelopeModel::channel(double t) const {
  const double c = coherence(t);
  const double p = (1.0 - c) / 2.0;
  Channel ch;
  CMat k0 = CMat::identity(2);
  k0 *= std::sqrt(1.0 - p);
  CMat k1 = pauli("Z");
  k1 *= std::sqrt(p);
  ch.kraus = {std::move(k0), std::move(k1)};
  return ch;
}

namespace {

void check_scenario(const NoiseScenario& s) {
  if (s.tau_c <= 0) throw std::invalid_argument("NoiseScenario: tau_c must be > 0");
  if (s.n_bath_qubits < 1 || s.n_bath_qubits > 3)
    throw std::invalid_argument("NoiseScenario: n_bath_qubits must be in [1,3]");
}

CMat seeded_hermitian(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat h(d, d);
  for (std::size_t i = 0; i < d * d; ++i) h.data()[i] = cplx(gauss(rng), gauss(rng));
  h = h + h.adjoint();
  h *= 0.5;
  return h;
}

}  // namespace

JointHamiltonian build_joint_hamiltonian(const NoiseScenario& s, std::size_t n_system_qubits) {
  check_scenario(s);
  const std::size_t n_bath = s.kind == NoiseKind::kCollectiveDephasing
                                 ? 1
                                 : static_cast<std::size_t>(s.n_bath_qubits);
  if ((n_system_qubits + n_bath) > 6)
    throw std::invalid_argument("build_joint_hamiltonian: total dimension exceeds 64");
  const std::size_t d_sys = std::size_t(1) << n_system_qubits;
  const std::size_t d_bath = std::size_t(1) << n_bath;

  JointHamiltonian out;
  out.system_dim = d_sys;
  out.bath_dim = d_bath;

  if (s.kind == NoiseKind::kCollectiveDephasing) {
    CMat sz(d_sys, d_sys);
    for (std::size_t q = 0; q < n_system_qubits; ++q) {
      std::string label(n_system_qubits, 'I');
      label[q] = 'Z';
      sz += pauli(label);
    }
    out.h = sz.kron(pauli("X"));
    out.h *= s.g;
    return out;
  }
  if (s.kind != NoiseKind::kSpinBath)
    throw std::invalid_argument("build_joint_hamiltonian: not a Hamiltonian noise kind");

  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_int_distribution<int> letter(0, 2);
  CMat h(d_sys * d_bath, d_sys * d_bath);
  const char letters[3] = {'X', 'Y', 'Z'};
  for (std::size_t q = 0; q < n_system_qubits; ++q) {
    std::string sys_label(n_system_qubits, 'I');
    sys_label[q] = 'Z';
    std::string bath_label(n_bath, 'I');
    bath_label[q % n_bath] = letters[letter(rng)];
    CMat term = pauli(sys_label).kron(pauli(bath_label));
    term *= s.g * unif(rng);
    h += term;
  }
  // Bath self-Hamiltonian: random Hermitian rescaled so that its spectral
  // spread (max - min eigenvalue) is exactly 1/tau_c.
  CMat hb = seeded_hermitian(d_bath, rng);
  const auto ed = eigh(hb);
  const double spread = ed.eigenvalues.back() - ed.eigenvalues.front();
  if (spread > 0) hb *= cplx(1.0 / (spread * s.tau_c), 0);
  h += CMat::identity(d_sys).kron(hb);
  out.h = std::move(h);
  return out;
}

NoiseModel build_noise_model(const NoiseScenario& s, std::size_t n_system_qubits) {
  check_scenario(s);
  switch (s.kind) {
    case NoiseKind::kCollectiveDephasing:
    case NoiseKind::kSpinBath:
      return build_joint_hamiltonian(s, n_system_qubits);
    case NoiseKind::kStochasticDephasing:
      return OuDephasingModel{s.tau_c, s.g, n_system_qubits, s.seed};
    case NoiseKind::kAnalyticEnvelope:
      return AnalyticEnvelopeModel{s.tau_c};
  }
  throw std::invalid_argument("build_noise_model: unknown kind");
}

namespace {

// First |coherence| <= target/2 crossing on the grid, linearly interpolated.
double half_crossing(const std::vector<double>& ts, const std::vector<double>& coh) {
  const double target = 0.5 * std::abs(coh.front());
  if (std::abs(coh.front()) < 1e-300)
    throw std::runtime_error("estimate_t2: probe has no initial coherence");
  for (std::size_t i = 1; i < coh.size(); ++i) {
    if (std::abs(coh[i]) <= target) {
      const double c0 = std::abs(coh[i - 1]), c1 = std::abs(coh[i]);
      const double w = (c0 - target) / std::max(c0 - c1, 1e-300);
      return ts[i - 1] + w * (ts[i] - ts[i - 1]);
    }
  }
  throw std::runtime_error("grid too short");
}

}  // namespace

double estimate_t2(const NoiseScenario& s, const CVec& probe,
                   const std::vector<double>& t_grid, std::size_t n_trajectories) {
  check_scenario(s);
  if (t_grid.size() < 2) throw std::invalid_argument("estimate_t2: grid too small");
  if (probe.size() != 2)
    throw std::invalid_argument("estimate_t2: probe must be a single-qubit state");

  if (s.kind == NoiseKind::kAnalyticEnvelope) {
    AnalyticEnvelopeModel model{s.tau_c};
    const double c0 = std::abs(std::conj(probe[0]) * probe[1]);
    std::vector<double> coh(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) coh[i] = c0 * model.coherence(t_grid[i]);
    return half_crossing(t_grid, coh);
  }

  if (s.kind == NoiseKind::kStochasticDephasing) {
    if (n_trajectories < 100)
      throw std::invalid_argument("estimate_t2: stochastic kinds need >= 100 trajectories");
    if (s.g == 0) throw std::runtime_error("grid too short");
    OuDephasingModel model{s.tau_c, s.g, 1, s.seed};
    // uniform resampling grid for the phase integral
    const double t_max = t_grid.back();
    const std::size_t n_steps = std::max<std::size_t>(
        400, static_cast<std::size_t>(std::ceil(t_max / (s.tau_c / 20.0))));
    const double dt = t_max / static_cast<double>(n_steps);
    std::vector<cplx> mean(n_steps + 1, cplx(0, 0));
    for (std::size_t k = 0; k < n_trajectories; ++k) {
      const auto x = model.trajectory(dt, n_steps, s.seed + 1 + k);
      double phase = 0;
      mean[0] += cplx(1, 0);
      for (std::size_t i = 0; i < n_steps; ++i) {
        phase += 0.5 * (x[i] + x[i + 1]) * dt;  // trapezoid
        mean[i + 1] += std::exp(cplx(0, -phase));
      }
    }
    const double c0 = std::abs(std::conj(probe[0]) * probe[1]);
    std::vector<double> ts(n_steps + 1), coh(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i) {
      ts[i] = dt * static_cast<double>(i);
      coh[i] = c0 * std::abs(mean[i]) / static_cast<double>(n_trajectories);
    }
    return half_crossing(ts, coh);
  }

  // Hamiltonian kinds: exact joint evolution of probe (x) random bath state.
  const JointHamiltonian jh = build_joint_hamiltonian(s, 1);
  if (jh.h.max_abs() == 0) throw std::runtime_error("grid too short");
  std::mt19937_64 rng(s.seed + 17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec bath(jh.bath_dim);
  for (auto& b : bath) b = cplx(gauss(rng), gauss(rng));
  const double bn = norm2(bath);
  for (auto& b : bath) b /= bn;
  const CVec joint = kron_vec(probe, bath);

  const auto ed = eigh(jh.h);
  // psi(t) = V exp(-i lambda t) V^dag psi0
  const std::size_t dim = joint.size();
  CVec proj(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    cplx acc = 0;
    for (std::size_t i = 0; i < dim; ++i) acc += std::conj(ed.eigenvectors(i, a)) * joint[i];
    proj[a] = acc;
  }
  std::vector<double> coh(t_grid.size());
  for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
    CVec psi(dim, cplx(0, 0));
    for (std::size_t a = 0; a < dim; ++a) {
      const cplx amp = std::exp(cplx(0, -ed.eigenvalues[a] * t_grid[ti])) * proj[a];
      for (std::size_t i = 0; i < dim; ++i) psi[i] += ed.eigenvectors(i, a) * amp;
    }
    // <0| Tr_bath rho |1>
    cplx c = 0;
    for (std::size_t b = 0; b < jh.bath_dim; ++b)
      c += psi[0 * jh.bath_dim + b] * std::conj(psi[1 * jh.bath_dim + b]);
    coh[ti] = std::abs(c);
  }
  return half_crossing(t_grid, coh);
}

DotBudget dot_budget(double t2, double gate_time, double c_of_T) {
  if (t2 <= 0 || gate_time <= 0 || c_of_T <= 0)
    throw std::invalid_argument("dot_budget: inputs must be > 0");
  DotBudget b;
  b.t2 = t2;
  b.gate_time = gate_time;
  b.c_of_T = c_of_T;
  b.tau_c = t2 / c_of_T;
  b.n_pulses = static_cast<long long>(std::floor(b.tau_c / gate_time));
  const double t_c = 2.0 * gate_time;
  b.correction = (t_c / b.tau_c) * (t_c / b.tau_c);
  return b;
}

}  // namespace ddlab
