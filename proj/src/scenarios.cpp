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

#include "ddlab/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ddlab/eig.hpp"
#include "ddlab/empirical_bb.hpp"
#include "ddlab/encodings.hpp"
#include "ddlab/noise_models.hpp"

namespace ddlab {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// CSV with a header row, '.' radix, newline-terminated.
class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string>& header) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out_ += ',';
      out_ += header[i];
    }
    out_ += '\n';
  }
  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ += ',';
      out_ += fmt17(values[i]);
    }
    out_ += '\n';
  }
  std::string str() const { return out_; }

 private:
  std::string out_;
};

double pget(const json& params, const std::string& key, double def) {
  return params.contains(key) ? params.at(key).get<double>() : def;
}

std::int64_t pget_int(const json& params, const std::string& key, std::int64_t def) {
  return params.contains(key) ? params.at(key).get<std::int64_t>() : def;
}

std::string pget_str(const json& params, const std::string& key, const std::string& def) {
  return params.contains(key) ? params.at(key).get<std::string>() : def;
}

CVec dfs_plus_state() {
  // (|01> + |10>)/sqrt(2)
  CVec v(4);
  v[1] = 1.0 / std::sqrt(2.0);
  v[2] = 1.0 / std::sqrt(2.0);
  return v;
}

CVec seeded_bath_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec b(dim);
  for (auto& x : b) x = cplx(gauss(rng), gauss(rng));
  const double n = norm2(b);
  for (auto& x : b) x /= n;
  return b;
}

CMat bath_hamiltonian_with_spread(double inverse_tau_c, std::mt19937_64& rng) {
  CMat hb = random_hermitian(2, rng);
  const auto ed = eigh(hb);
  const double spread = ed.eigenvalues.back() - ed.eigenvalues.front();
  hb *= cplx(inverse_tau_c / spread, 0);
  return hb;
}

// ---------------------------------------------------------------------
// dfs_leakage: mode=algebra | collective | leakage
// ---------------------------------------------------------------------

ScenarioResult run_dfs_leakage(const json& params, std::uint64_t seed, json& effective) {
  const std::string mode = pget_str(params, "mode", "algebra");
  effective["mode"] = mode;
  ScenarioResult result;
  json metrics;

  const CodeSpace code = build_dfs(1);
  const CMat xbar = code.logical_ops.at("X");

  if (mode == "algebra") {
    const CMat kick = expm_hamiltonian(xbar, M_PI);
    std::vector<CMat> errors;
    for (const auto& label : dfs_leakage_labels()) errors.push_back(pauli(label));
    const ParityKickReport report = parity_kick_check(errors, kick, 1e-12);
    metrics["max_anticommutator_residual"] = report.max_anticommutator_norm();
    metrics["all_leakage_anticommute"] = report.all_anticommute();
    const CMat sz = pauli("ZI") + pauli("IZ");
    metrics["collective_z_commutator_norm"] = commutator(kick, sz).max_abs();
    metrics["zz_up_to_phase_residual"] =
        max_abs_diff(canonical_phase(kick), canonical_phase(pauli("ZZ")));
    metrics["zz_exact_residual"] = max_abs_diff(kick, pauli("ZZ"));
  } else if (mode == "collective") {
    const double g = pget(params, "g_rad_per_ns", 2.0);
    const double t_max = pget(params, "t_max_ns", 100.0);
    const auto n_steps = static_cast<std::size_t>(pget_int(params, "n_steps", 1000));
    effective["g_rad_per_ns"] = g;
    effective["t_max_ns"] = t_max;
    effective["n_steps"] = n_steps;

    NoiseScenario ns;
    ns.kind = NoiseKind::kCollectiveDephasing;
    ns.tau_c = 1.0;  // unused by the collective model
    ns.g = g;
    ns.seed = seed;
    const JointHamiltonian jh = build_joint_hamiltonian(ns, 2);

    std::mt19937_64 rng(seed);
    const CVec psi_l = dfs_plus_state();
    const CVec bath = seeded_bath_state(jh.bath_dim, rng);
    CMat rho = outer(kron_vec(psi_l, bath), kron_vec(psi_l, bath));
    const double dt = t_max / static_cast<double>(n_steps);
    const CMat step = expm_hermitian(jh.h, dt);

    CsvBuilder csv({"t_ns", "fidelity"});
    double max_dev = 0;
    csv.row({0.0, fidelity(partial_trace_bath(rho, 4), psi_l)});
    for (std::size_t i = 1; i <= n_steps; ++i) {
      rho = conjugate_by(step, rho);
      const double f = fidelity(partial_trace_bath(rho, 4), psi_l);
      max_dev = std::max(max_dev, std::abs(1.0 - f));
      csv.row({dt * static_cast<double>(i), f});
    }
    metrics["max_fidelity_deviation"] = max_dev;
    metrics["steps"] = n_steps;
    result.csvs["collective_fidelity.csv"] = csv.str();
  } else if (mode == "leakage") {
    const double g = pget(params, "g_rad_per_ns", 0.4);
    const double tau_c = pget(params, "tau_c_ns", 1.0);
    const double delta_t = pget(params, "delta_t_ns", 0.02);
    const double t_max = pget(params, "t_max_ns", 0.8);
    effective["g_rad_per_ns"] = g;
    effective["tau_c_ns"] = tau_c;
    effective["delta_t_ns"] = delta_t;
    effective["t_max_ns"] = t_max;

    std::mt19937_64 rng(seed);
    const CMat hb = bath_hamiltonian_with_spread(1.0 / tau_c, rng);
    CMat h = pauli("XI").kron(pauli("X"));
    h *= g;
    h += CMat::identity(4).kron(hb);

    const PulseGroup group = close_group({pauli("ZZ")}, 4);
    const CycleSchedule sched = CycleSchedule::symmetrization(group.size(), delta_t);
    const auto n_cycles =
        static_cast<std::size_t>(std::llround(t_max / sched.cycle_time()));
    const CVec psi_l = dfs_plus_state();
    const CVec bath = seeded_bath_state(2, rng);
    const CMat rho0 = outer(kron_vec(psi_l, bath), kron_vec(psi_l, bath));

    const Trajectory bb = simulate_cycle(h, sched, group, rho0, n_cycles);
    const PulseGroup trivial = close_group({CMat::identity(4)}, 2);
    const CycleSchedule free_sched =
        CycleSchedule::symmetrization(1, sched.cycle_time());
    const Trajectory nobb = simulate_cycle(h, free_sched, trivial, rho0, n_cycles);

    CsvBuilder csv({"t_ns", "fidelity_bb", "fidelity_nobb"});
    double min_margin = 1.0, final_bb = 1.0, final_nobb = 1.0;
    for (std::size_t i = 0; i < bb.states.size(); ++i) {
      final_bb = fidelity(partial_trace_bath(bb.states[i], 4), psi_l);
      final_nobb = fidelity(partial_trace_bath(nobb.states[i], 4), psi_l);
      if (i > 0) min_margin = std::min(min_margin, final_bb - final_nobb);
      csv.row({bb.times[i], final_bb, final_nobb});
    }
    metrics["final_fidelity_bb"] = final_bb;
    metrics["final_fidelity_nobb"] = final_nobb;
    metrics["min_margin_after_t0"] = min_margin;
    metrics["n_cycles"] = n_cycles;
    result.csvs["leakage_fidelity.csv"] = csv.str();
  } else {
    throw std::invalid_argument("dfs_leakage: unknown mode '" + mode + "'");
  }

  result.results["metrics"] = std::move(metrics);
  return result;
}

// ---------------------------------------------------------------------
// parity_kick_scaling
// ---------------------------------------------------------------------

ScenarioResult run_parity_kick_scaling(const json& params, std::uint64_t seed,
                                       json& effective) {
  const double tau_c = pget(params, "tau_c_ns", 1.0);
  const double g = pget(params, "g_rad_per_ns", 0.4);
  const double total_time = pget(params, "total_time_ns", 0.8);
  std::vector<std::int64_t> cycle_counts = {400, 200, 100, 50, 25};
  if (params.contains("n_cycles_list"))
    cycle_counts = params.at("n_cycles_list").get<std::vector<std::int64_t>>();
  effective["tau_c_ns"] = tau_c;
  effective["g_rad_per_ns"] = g;
  effective["total_time_ns"] = total_time;
  effective["n_cycles_list"] = cycle_counts;

  std::mt19937_64 rng(seed);
  const CMat hb = bath_hamiltonian_with_spread(1.0 / tau_c, rng);
  CMat h = pauli("XI").kron(pauli("X"));
  h *= g;
  h += CMat::identity(4).kron(hb);

  const PulseGroup group = close_group({pauli("ZZ")}, 4);
  const CVec psi_l = dfs_plus_state();
  const CVec bath = seeded_bath_state(2, rng);
  const CMat rho0 = outer(kron_vec(psi_l, bath), kron_vec(psi_l, bath));

  std::vector<double> delta_ts;
  for (auto n : cycle_counts)
    delta_ts.push_back(total_time / (2.0 * static_cast<double>(n)));

  const ScalingFit fit =
      scaling_exponent(h, delta_ts, group, rho0, psi_l, total_time);

  ScenarioResult result;
  CsvBuilder csv({"delta_t_ns", "cycle_time_ns", "infidelity"});
  for (std::size_t i = 0; i < delta_ts.size(); ++i)
    csv.row({delta_ts[i], fit.cycle_times[i], fit.infidelities[i]});
  result.csvs["scaling.csv"] = csv.str();

  json metrics;
  metrics["slope"] = fit.slope;
  metrics["fit_residual"] = fit.fit_residual;
  metrics["degenerate"] = fit.degenerate;
  metrics["suppressed"] = fit.suppressed;
  metrics["monotone"] = fit.monotone;
  result.results["metrics"] = std::move(metrics);
  return result;
}

// ---------------------------------------------------------------------
// theorem1
// ---------------------------------------------------------------------

ScenarioResult run_theorem1(const json& params, std::uint64_t seed, json& effective) {
  const auto trials = static_cast<std::size_t>(pget_int(params, "trials", 50));
  const bool negative = params.contains("negative_control")
                            ? params.at("negative_control").get<bool>()
                            : true;
  effective["trials"] = trials;
  effective["negative_control"] = negative;

  const CodeSpace code = build_dfs(1);
  const std::vector<CMat> gens = {expm_hamiltonian(code.logical_ops.at("X"), M_PI / 2),
                                  expm_hamiltonian(code.logical_ops.at("Y"), M_PI / 2)};
  const Theorem1Report report = theorem1_check(code, gens, trials, seed);

  json metrics;
  metrics["group_size"] = report.group_size;
  metrics["max_code_residual"] = report.max_code_residual;
  metrics["max_leakage_residual"] = report.max_leakage_residual;
  metrics["passed"] = report.passed(1e-10);
  if (negative) {
    const Theorem1Report control =
        theorem1_check(code, {CMat::identity(4)}, trials, seed);
    metrics["negative_control_code_residual"] = control.max_code_residual;
    metrics["negative_control_fails"] = !control.passed(1e-10);
  }
  ScenarioResult result;
  result.results["metrics"] = std::move(metrics);
  return result;
}

// ---------------------------------------------------------------------
// qecc_hybrid
// ---------------------------------------------------------------------

ScenarioResult run_qecc_hybrid(const json& params, std::uint64_t seed, json& effective) {
  const double gz = pget(params, "gz_rad_per_ns", 0.25);
  const double gx = pget(params, "gx_rad_per_ns", 0.05);
  const double tau_c = pget(params, "tau_c_ns", 1.0);
  const double delta_t = pget(params, "delta_t_ns", 0.02);
  const auto cycles = static_cast<std::size_t>(pget_int(params, "cycles_per_round", 10));
  const auto rounds = static_cast<std::size_t>(pget_int(params, "rounds", 5));
  const auto trials = static_cast<std::size_t>(pget_int(params, "trials", 100));
  effective["gz_rad_per_ns"] = gz;
  effective["gx_rad_per_ns"] = gx;
  effective["tau_c_ns"] = tau_c;
  effective["delta_t_ns"] = delta_t;
  effective["cycles_per_round"] = cycles;
  effective["rounds"] = rounds;
  effective["trials"] = trials;

  std::mt19937_64 rng(seed);
  CMat h(16, 16);
  const char* z_labels[3] = {"ZII", "IZI", "IIZ"};
  const char* x_labels[3] = {"XII", "IXI", "IIX"};
  for (const char* l : z_labels) {
    CMat t = pauli(l).kron(pauli("X"));
    t *= gz;
    h += t;
  }
  for (const char* l : x_labels) {
    CMat t = pauli(l).kron(pauli("Z"));
    t *= gx;
    h += t;
  }
  h += CMat::identity(8).kron(bath_hamiltonian_with_spread(1.0 / tau_c, rng));

  const StabilizerCode code = build_bitflip_code();
  QeccSchedule sched;
  sched.delta_t = delta_t;
  sched.cycles_per_round = cycles;

  ScenarioResult result;
  CsvBuilder csv({"trial", "fidelity_bb_final", "fidelity_nobb_final"});
  std::size_t wins = 0;
  double sum_bb = 0, sum_nobb = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const QeccResult r = qecc_bb_cycle(code, h, sched, rounds, seed + 1000 + t);
    const double fb = r.fidelity_bb.back();
    const double fn = r.fidelity_nobb.back();
    if (fb > fn) ++wins;
    sum_bb += fb;
    sum_nobb += fn;
    csv.row({static_cast<double>(t), fb, fn});
  }
  result.csvs["qecc_trials.csv"] = csv.str();

  bool exclusion_enforced = false;
  try {
    QeccSchedule bad = sched;
    bad.pulses_during_recovery = true;
    qecc_bb_cycle(code, h, bad, 1, seed);
  } catch (const std::invalid_argument&) {
    exclusion_enforced = true;
  }

  json metrics;
  metrics["trials"] = trials;
  metrics["wins_bb"] = wins;
  metrics["win_fraction"] = static_cast<double>(wins) / static_cast<double>(trials);
  metrics["mean_fidelity_bb"] = sum_bb / static_cast<double>(trials);
  metrics["mean_fidelity_nobb"] = sum_nobb / static_cast<double>(trials);
  metrics["recovery_exclusion_enforced"] = exclusion_enforced;
  result.results["metrics"] = std::move(metrics);
  return result;
}

// ---------------------------------------------------------------------
// empirical_bb: mode=loop | consistency
// ---------------------------------------------------------------------

ScenarioResult run_empirical_bb(const json& params, std::uint64_t seed, json& effective) {
  const std::string mode = pget_str(params, "mode", "loop");
  effective["mode"] = mode;
  ScenarioResult result;
  json metrics;

  if (mode == "loop") {
    const double eps = pget(params, "epsilon_rad_per_ns", 0.02);
    const double tau0 = pget(params, "tau0_ns", 0.01);
    const auto rounds = static_cast<std::size_t>(pget_int(params, "rounds", 3));
    const double sigma = pget(params, "sigma", 0.0);
    const auto max_pulses = static_cast<std::size_t>(pget_int(params, "max_pulses", 2));
    const double spacing = pget(params, "min_spacing_fraction", 0.4);
    const auto grid_points = static_cast<std::size_t>(pget_int(params, "grid_points", 16));
    effective["epsilon_rad_per_ns"] = eps;
    effective["tau0_ns"] = tau0;
    effective["rounds"] = rounds;
    effective["sigma"] = sigma;
    effective["max_pulses"] = max_pulses;
    effective["min_spacing_fraction"] = spacing;
    effective["grid_points"] = grid_points;

    const CodeSpace code = build_dfs(1);
    const CMat leak = pauli("XI");

    BBProblem problem;
    problem.basis = OperatorBasis::pauli_basis(2);
    problem.chi_hat.assign(problem.basis.size() - 1, 0.0);
    problem.max_pulses = max_pulses;
    problem.min_spacing_fraction = spacing;
    PulseFamilyEntry fe;
    fe.name = "xbar";
    fe.generator = code.logical_ops.at("X");
    for (std::size_t j = 0; j < grid_points; ++j)
      fe.angle_grid.push_back(2.0 * M_PI * static_cast<double>(j) /
                              static_cast<double>(grid_points));
    problem.family.push_back(std::move(fe));

    ControlLoopConfig config;
    config.problem = problem;
    config.tau_points = {tau0, 2 * tau0, 3 * tau0};
    config.rounds = rounds;
    config.sigma = sigma;
    config.seed = seed;

    const PlantFamily plant = [&](double t, const CMat& rho) {
      const CMat u = expm_hamiltonian(leak, eps * t);
      return conjugate_by(u, rho);
    };
    const ControlLoopResult loop = control_loop(plant, config);

    CsvBuilder csv({"round", "distance"});
    std::size_t converged_round = 0;
    for (std::size_t r = 0; r < loop.distance_trace.size(); ++r) {
      csv.row({static_cast<double>(r + 1), loop.distance_trace[r]});
      if (converged_round == 0 && loop.distance_trace[r] < 1e-6) converged_round = r + 1;
    }
    result.csvs["control_loop.csv"] = csv.str();

    metrics["final_distance"] = loop.distance_trace.back();
    metrics["converged_round"] = converged_round;
    metrics["n_pulses_found"] = loop.history.size();
    metrics["found_angle_rad"] = loop.history.empty() ? 0.0 : loop.history.front().angle;
    metrics["group_size"] = loop.solution.pulses.size();
    result.results["problem"] = json::parse(bb_problem_to_json(problem));
    result.results["solution"] = json::parse(bb_solution_to_json(loop.solution, problem.basis));
  } else if (mode == "consistency") {
    const auto cases = static_cast<std::size_t>(pget_int(params, "cases", 50));
    effective["cases"] = cases;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nq_dist(1, 2);
    double max_err = 0;
    for (std::size_t c = 0; c < cases; ++c) {
      const std::size_t nq = static_cast<std::size_t>(nq_dist(rng));
      const OperatorBasis basis = OperatorBasis::pauli_basis(nq);
      // random Pauli-string generators (1 or 2 of them)
      std::uniform_int_distribution<std::size_t> pick(1, basis.size() - 1);
      std::vector<CMat> gens;
      const int n_gens = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < n_gens; ++i) gens.push_back(basis.element(pick(rng)));
      const PulseGroup group = close_group(gens, 64);

      const CMat h = random_hermitian(basis.dim(), rng);
      const auto coeffs = basis.expand(h);
      std::vector<double> chi_bar(basis.size() - 1);
      for (std::size_t a = 1; a < basis.size(); ++a) chi_bar[a - 1] = coeffs[a].real();
      const std::vector<double> tilde = chi_tilde(chi_bar, group, basis);
      const auto sym_coeffs = basis.expand(symmetrize(h, group));
      for (std::size_t a = 1; a < basis.size(); ++a)
        max_err = std::max(max_err, std::abs(tilde[a - 1] - sym_coeffs[a].real()));
    }
    metrics["cases"] = cases;
    metrics["max_consistency_error"] = max_err;
  } else {
    throw std::invalid_argument("empirical_bb: unknown mode '" + mode + "'");
  }

  result.results["metrics"] = std::move(metrics);
  return result;
}

// ---------------------------------------------------------------------
// dot_budget
// ---------------------------------------------------------------------

ScenarioResult run_dot_budget(const json& params, std::uint64_t /*seed*/, json& effective) {
  const double c_of_t = pget(params, "c_of_T", 1.0);
  double t2_ns;
  if (params.contains("t2_ns")) {
    t2_ns = params.at("t2_ns").get<double>();
  } else {
    const double tau_c_ns = pget(params, "tau_c_ns", 100.0);
    t2_ns = tau_c_ns * c_of_t;
  }
  const double gate_ps = pget(params, "gate_time_ps", 50.0);
  effective["t2_ns"] = t2_ns;
  effective["gate_time_ps"] = gate_ps;
  effective["c_of_T"] = c_of_t;

  const DotBudget budget = dot_budget(t2_ns, gate_ps / 1000.0, c_of_t);

  ScenarioResult result;
  json metrics;
  metrics["tau_c_ns"] = budget.tau_c;
  metrics["n_pulses"] = budget.n_pulses;
  metrics["correction"] = budget.correction;
  result.results["metrics"] = std::move(metrics);
  return result;
}

// ---------------------------------------------------------------------
// tomography_roundtrip
// ---------------------------------------------------------------------

ScenarioResult run_tomography_roundtrip(const json& params, std::uint64_t seed,
                                        json& effective) {
  const auto channels = static_cast<std::size_t>(pget_int(params, "channels", 20));
  const auto states = static_cast<std::size_t>(pget_int(params, "states_per_channel", 20));
  const auto kraus_count = static_cast<std::size_t>(pget_int(params, "kraus_count", 3));
  std::vector<std::int64_t> nq_list = {1, 2};
  if (params.contains("n_qubits_list"))
    nq_list = params.at("n_qubits_list").get<std::vector<std::int64_t>>();
  effective["channels"] = channels;
  effective["states_per_channel"] = states;
  effective["kraus_count"] = kraus_count;
  effective["n_qubits_list"] = nq_list;

  ScenarioResult result;
  CsvBuilder csv({"channel", "n_qubits", "action_error", "min_chi_eigenvalue",
                  "hermiticity_residual", "tp_residual"});
  double max_action_error = 0, min_eig = 0, max_herm = 0;
  bool json_roundtrip_ok = true;
  for (std::size_t c = 0; c < channels; ++c) {
    const auto nq = static_cast<std::size_t>(nq_list[c % nq_list.size()]);
    const OperatorBasis basis = OperatorBasis::pauli_basis(nq);
    const Channel ch = random_cptp_channel(nq, kraus_count, seed + 31 * c);
    const TomographyResult tomo = tomography(ch, basis);

    std::mt19937_64 rng(seed + 77 * c + 5);
    double action_error = 0;
    for (std::size_t s = 0; s < states; ++s) {
      const CMat rho = random_density_matrix(basis.dim(), rng);
      action_error =
          std::max(action_error, max_abs_diff(apply_chi(tomo.process, rho), ch.apply(rho)));
    }
    const double eig = tomo.process.min_eigenvalue();
    const double herm = tomo.process.hermiticity_residual();
    max_action_error = std::max(max_action_error, action_error);
    min_eig = std::min(min_eig, eig);
    max_herm = std::max(max_herm, herm);
    csv.row({static_cast<double>(c), static_cast<double>(nq), action_error, eig, herm,
             tomo.tp_residual});

    const std::string dumped = chi_to_json(tomo.process);
    if (chi_to_json(chi_from_json(dumped)) != dumped) json_roundtrip_ok = false;
  }
  result.csvs["tomography.csv"] = csv.str();

  json metrics;
  metrics["max_action_error"] = max_action_error;
  metrics["min_chi_eigenvalue"] = min_eig;
  metrics["max_hermiticity_residual"] = max_herm;
  metrics["json_roundtrip_bitexact"] = json_roundtrip_ok;
  result.results["metrics"] = std::move(metrics);
  return result;
}

struct ScenarioEntry {
  std::string name;
  std::string params_doc;
  ScenarioResult (*run)(const json&, std::uint64_t, json&);
};

const std::vector<ScenarioEntry>& registry() {
  static const std::vector<ScenarioEntry> entries = {
      {"dfs_leakage",
       "mode=algebra|collective|leakage; g_rad_per_ns, tau_c_ns, delta_t_ns, t_max_ns,"
       " n_steps (defaults: algebra; 2.0, 1.0, 0.02, 0.8/100, 1000)",
       run_dfs_leakage},
      {"parity_kick_scaling",
       "tau_c_ns=1, g_rad_per_ns=0.4, total_time_ns=0.8, n_cycles_list=[400,200,100,50,25]",
       run_parity_kick_scaling},
      {"theorem1", "trials=50, negative_control=true", run_theorem1},
      {"qecc_hybrid",
       "gz_rad_per_ns=0.25, gx_rad_per_ns=0.05, tau_c_ns=1, delta_t_ns=0.02,"
       " cycles_per_round=10, rounds=5, trials=100",
       run_qecc_hybrid},
      {"empirical_bb",
       "mode=loop|consistency; epsilon_rad_per_ns=0.02, tau0_ns=0.01, rounds=3, sigma=0,"
       " max_pulses=2, min_spacing_fraction=0.4, grid_points=16; cases=50",
       run_empirical_bb},
      {"dot_budget", "tau_c_ns=100 (or t2_ns), gate_time_ps=50, c_of_T=1", run_dot_budget},
      {"tomography_roundtrip",
       "channels=20, states_per_channel=20, kraus_count=3, n_qubits_list=[1,2]",
       run_tomography_roundtrip},
  };
  return entries;
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line number
    int line = 1;
    for (std::size_t i = 0; i < std::min(text.size(), static_cast<std::size_t>(e.byte)); ++i)
      if (text[i] == '\n') ++line;
    throw ConfigError("JSON parse error at line " + std::to_string(line) + ": " + e.what(),
                      line);
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object", 1);
  ScenarioConfig config;
  if (!j.contains("scenario") || !j.at("scenario").is_string())
    throw ConfigError("config requires a string 'scenario' field", 1);
  config.scenario = j.at("scenario").get<std::string>();
  bool known = false;
  for (const auto& e : registry()) known = known || e.name == config.scenario;
  if (!known) throw ConfigError("unknown scenario '" + config.scenario + "'", 1);
  config.params = j.value("params", json::object());
  if (!config.params.is_object()) throw ConfigError("'params' must be an object", 1);
  config.seed = j.value("seed", std::uint64_t(0));
  config.output_dir = j.value("output_dir", std::string("."));
  return config;
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path, 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  for (const auto& entry : registry()) {
    if (entry.name != config.scenario) continue;
    json effective = config.params;
    ScenarioResult result = entry.run(config.params, config.seed, effective);
    result.results["scenario"] = config.scenario;
    result.results["seed"] = config.seed;
    result.results["params"] = std::move(effective);
    if (!result.results.contains("warnings"))
      result.results["warnings"] = json::array();
    return result;
  }
  throw std::invalid_argument("unknown scenario '" + config.scenario + "'");
}

void write_outputs(const ScenarioResult& result, const std::string& output_dir) {
  std::filesystem::create_directories(output_dir);
  {
    std::ofstream out(std::filesystem::path(output_dir) / "results.json",
                      std::ios::binary);
    out << result.results.dump(2) << '\n';
  }
  for (const auto& [name, content] : result.csvs) {
    std::ofstream out(std::filesystem::path(output_dir) / name, std::ios::binary);
    out << content;
  }
}

std::string list_scenarios_text() {
  std::string out = "scenario              params (defaults)\n";
  out += "--------              -----------------\n";
  for (const auto& e : registry()) {
    out += e.name;
    out += std::string(e.name.size() < 22 ? 22 - e.name.size() : 2, ' ');
    out += e.params_doc;
    out += '\n';
  }
  return out;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.push_back(e.name);
    return n;
  }();
  return names;
}

}  // namespace ddlab
