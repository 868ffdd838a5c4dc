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

#include "ddlab/empirical_bb.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ddlab/nelder_mead.hpp"

namespace ddlab {

std::vector<double> chi_tilde(const std::vector<double>& chi_bar, const PulseGroup& g,
                              const OperatorBasis& basis) {
  if (!g.closed) throw std::invalid_argument("chi_tilde: group is not closed");
  if (chi_bar.size() + 1 != basis.size())
    throw std::invalid_argument("chi_tilde: coefficient count does not match basis");
  const AdjointRep rep = adjoint_rep(g, basis);
  const std::size_t n2 = basis.size();
  std::vector<double> out(n2 - 1, 0.0);
  for (std::size_t k = 0; k < g.size(); ++k)
    for (std::size_t a = 1; a < n2; ++a) {
      const double w = chi_bar[a - 1];
      if (w == 0) continue;
      for (std::size_t b = 1; b < n2; ++b) out[b - 1] += w * rep.entry(k, a, b);
    }
  const double inv_n = 1.0 / static_cast<double>(g.size());
  for (double& v : out) v *= inv_n;
  return out;
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distance: length mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

namespace {

std::size_t group_size_cap(const BBProblem& p) {
  if (p.min_spacing_fraction <= 0) return 64;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(1.0 / p.min_spacing_fraction)));
}

struct Candidate {
  std::vector<PulseChoice> specs;
  PulseGroup group;
  std::vector<double> chi_t;
  double dist = 0;
  bool feasible = false;
};

Candidate evaluate(const BBProblem& p, const std::vector<PulseChoice>& specs,
                   std::size_t cap) {
  Candidate c;
  c.specs = specs;
  std::vector<CMat> pulses;
  pulses.reserve(specs.size());
  for (const auto& s : specs)
    pulses.push_back(expm_hamiltonian(p.family[s.family_index].generator, s.angle));
  try {
    c.group = close_group(pulses, cap);
  } catch (const std::runtime_error&) {
    return c;  // closure exceeds the spacing cap: infeasible
  }
  c.chi_t = chi_tilde(p.chi_bar, c.group, p.basis);
  c.dist = distance(c.chi_t, p.chi_hat);
  c.feasible = true;
  return c;
}

// total discrete candidate count: sum over sizes s of C(m + s - 1, s)
double discrete_candidate_count(std::size_t m, std::size_t max_pulses) {
  double total = 0, comb = 1;  // C(m-1+s, s) built incrementally
  for (std::size_t s = 1; s <= max_pulses; ++s) {
    comb = comb * static_cast<double>(m + s - 1) / static_cast<double>(s);
    total += comb;
    if (total > 1e12) break;
  }
  return total;
}

BBSolution from_candidate(Candidate&& c, std::size_t iterations) {
  BBSolution sol;
  sol.pulses = std::move(c.group);
  sol.specs = std::move(c.specs);
  sol.chi_tilde = std::move(c.chi_t);
  sol.distance = c.dist;
  sol.iterations = iterations;
  return sol;
}

BBSolution solve_discrete(const BBProblem& p) {
  // Flatten discrete choices in (family, angle) order so that enumeration
  // order is the tie-break order: fewest pulses first, then lexicographic.
  std::vector<PulseChoice> choices;
  for (std::size_t f = 0; f < p.family.size(); ++f)
    for (double a : p.family[f].angle_grid) choices.push_back({f, a});

  const std::size_t cap = group_size_cap(p);
  std::size_t evaluated = 0;
  bool any_feasible = false;
  Candidate best;
  best.dist = std::numeric_limits<double>::infinity();

  // Enumerate non-decreasing index tuples (multisets) of each size.
  for (std::size_t size = 1; size <= p.max_pulses; ++size) {
    std::vector<std::size_t> idx(size, 0);
    while (true) {
      std::vector<PulseChoice> specs;
      specs.reserve(size);
      for (std::size_t i : idx) specs.push_back(choices[i]);
      Candidate c = evaluate(p, specs, cap);
      ++evaluated;
      if (c.feasible) {
        any_feasible = true;
        if (c.dist < best.dist - 1e-12) best = std::move(c);
      }
      // advance multiset indices
      std::size_t pos = size;
      while (pos > 0) {
        --pos;
        if (idx[pos] + 1 < choices.size()) {
          ++idx[pos];
          for (std::size_t q = pos + 1; q < size; ++q) idx[q] = idx[pos];
          break;
        }
        if (pos == 0) { pos = static_cast<std::size_t>(-1); break; }
      }
      if (pos == static_cast<std::size_t>(-1)) break;
    }
  }
  if (!any_feasible)
    throw std::runtime_error("solve: no feasible pulse set under the spacing constraint");
  return from_candidate(std::move(best), evaluated);
}

// Average of Eq. (9) over an explicit unitary list (no closure). One
// decoupling cycle averages the generator over exactly the pulses it
// applies, so this is the physically smooth objective for continuous
// angles, where closure is unbounded for almost every angle.
std::vector<double> chi_tilde_over_set(const std::vector<double>& chi_bar,
                                       const std::vector<CMat>& unitaries,
                                       const OperatorBasis& basis) {
  const std::size_t n2 = basis.size();
  const double d = static_cast<double>(basis.dim());
  std::vector<double> out(n2 - 1, 0.0);
  for (const auto& u : unitaries) {
    for (std::size_t a = 1; a < n2; ++a) {
      const double w = chi_bar[a - 1];
      if (w == 0) continue;
      const CMat conj_a = conjugate_by_adjoint(u, basis.element(a));
      for (std::size_t b = 1; b < n2; ++b)
        out[b - 1] += w * (basis.element(b).hs_dot(conj_a) / d).real();
    }
  }
  const double inv_n = 1.0 / static_cast<double>(unitaries.size());
  for (double& v : out) v *= inv_n;
  return out;
}

BBSolution solve_continuous(const BBProblem& p, std::uint64_t seed) {
  const std::size_t cap = group_size_cap(p);
  std::mt19937_64 rng(seed);
  std::size_t evaluated = 0;

  struct SetCandidate {
    std::vector<PulseChoice> specs;
    double dist = std::numeric_limits<double>::infinity();
  };
  SetCandidate best_set;

  for (std::size_t n_pulses = 1; n_pulses <= p.max_pulses && n_pulses + 1 <= cap;
       ++n_pulses) {
    for (std::size_t f0 = 0; f0 < p.family.size(); ++f0) {
      std::vector<std::size_t> fam(n_pulses);
      for (std::size_t i = 0; i < n_pulses; ++i) fam[i] = (f0 + i) % p.family.size();
      auto objective = [&](const std::vector<double>& angles) {
        std::vector<CMat> set = {CMat::identity(p.basis.dim())};
        for (std::size_t i = 0; i < n_pulses; ++i)
          set.push_back(expm_hamiltonian(p.family[fam[i]].generator, angles[i]));
        ++evaluated;
        const double d = distance(chi_tilde_over_set(p.chi_bar, set, p.basis), p.chi_hat);
        if (d < best_set.dist) {
          best_set.dist = d;
          best_set.specs.clear();
          for (std::size_t i = 0; i < n_pulses; ++i)
            best_set.specs.push_back({fam[i], angles[i]});
        }
        return d;
      };
      for (int restart = 0; restart < 10; ++restart) {
        std::vector<double> x0(n_pulses);
        for (std::size_t i = 0; i < n_pulses; ++i) {
          const auto& fe = p.family[fam[i]];
          std::uniform_real_distribution<double> u(fe.angle_lo, fe.angle_hi);
          x0[i] = u(rng);
        }
        NelderMeadOptions opts;
        opts.initial_step = 0.4;
        opts.x_tol = 1e-10;
        opts.f_tol = 1e-16;
        nelder_mead(objective, x0, opts);
      }
    }
  }
  if (best_set.specs.empty())
    throw std::runtime_error("solve: no feasible pulse set under the spacing constraint");

  // Re-evaluate the optimum under closure semantics; tolerance-based
  // deduplication closes cleanly at the converged angles.
  Candidate closed = evaluate(p, best_set.specs, cap);
  if (!closed.feasible)
    throw std::runtime_error(
        "solve: continuous optimum does not close under the spacing constraint");
  return from_candidate(std::move(closed), evaluated);
}

}  // namespace

BBSolution solve(const BBProblem& problem, std::uint64_t seed) {
  if (problem.family.empty()) throw std::invalid_argument("solve: empty pulse family");
  if (problem.max_pulses < 1) throw std::invalid_argument("solve: max_pulses must be >= 1");
  if (problem.chi_bar.size() != problem.chi_hat.size())
    throw std::invalid_argument("solve: chi_bar/chi_hat length mismatch");

  bool all_discrete = true;
  std::size_t m = 0;
  for (const auto& fe : problem.family) {
    if (fe.angle_grid.empty()) all_discrete = false;
    m += fe.angle_grid.size();
  }
  if (all_discrete && discrete_candidate_count(m, problem.max_pulses) <= 1e5)
    return solve_discrete(problem);
  return solve_continuous(problem, seed);
}

ControlLoopResult control_loop(const PlantFamily& plant, const ControlLoopConfig& config) {
  if (config.rounds < 1) throw std::invalid_argument("control_loop: rounds must be >= 1");
  if (config.tau_points.size() < 2)
    throw std::invalid_argument("control_loop: need >= 2 tau points");

  const OperatorBasis& basis = config.problem.basis;
  ControlLoopResult result;
  PulseGroup current = close_group({CMat::identity(basis.dim())}, 2);
  std::size_t total_iterations = 0;

  for (std::size_t round = 0; round < config.rounds; ++round) {
    // Tomography of the plant dressed by one cycle of the current pulses.
    auto dressed = [&](double tau) {
      const double seg = tau / static_cast<double>(current.size());
      return [&, seg](const CMat& rho) {
        CMat r = rho;
        for (const auto& u : current.elements) {
          r = conjugate_by(u, r);
          r = plant(seg, r);
          r = conjugate_by_adjoint(u, r);  // U^dag rho U
        }
        return r;
      };
    };
    auto family = [&](double tau) {
      std::uint64_t tau_bits;
      static_assert(sizeof(tau_bits) == sizeof(tau));
      std::memcpy(&tau_bits, &tau, sizeof(tau));
      ShotNoise noise{config.sigma, config.seed +
                                        0x9e3779b97f4a7c15ULL * (round + 1) +
                                        (tau_bits ^ (tau_bits >> 31))};
      return tomography(dressed(tau), basis, noise, tau).process;
    };
    ShortTimeGenerator gen = short_time_generator(family, config.tau_points);

    BBProblem p = config.problem;
    p.chi_bar = gen.chi_bar;
    BBSolution sol = solve(p, config.seed);
    total_iterations += sol.iterations;
    result.distance_trace.push_back(sol.distance);

    // Compose: new pulses refine the existing set.
    bool adds = false;
    for (const auto& s : sol.specs) {
      const CMat u =
          canonical_phase(expm_hamiltonian(config.problem.family[s.family_index].generator, s.angle));
      if (max_abs_diff(u, CMat::identity(basis.dim())) > 1e-9) adds = true;
    }
    if (adds) {
      std::vector<CMat> gens;
      for (std::size_t i = 1; i < current.size(); ++i) gens.push_back(current.elements[i]);
      for (const auto& s : sol.specs)
        gens.push_back(expm_hamiltonian(config.problem.family[s.family_index].generator, s.angle));
      for (const auto& s : sol.specs) result.history.push_back(s);
      current = close_group(gens, 256);
    }
  }

  BBSolution final_sol;
  final_sol.pulses = current;
  final_sol.specs = result.history;
  final_sol.chi_tilde = std::vector<double>(basis.size() - 1, 0.0);
  final_sol.distance = result.distance_trace.back();
  final_sol.iterations = total_iterations;
  result.solution = std::move(final_sol);
  return result;
}

std::string bb_problem_to_json(const BBProblem& p) {
  nlohmann::json j;
  j["n_qubits"] = p.basis.n_qubits();
  j["chi_bar"] = p.chi_bar;
  j["chi_hat"] = p.chi_hat;
  j["max_pulses"] = p.max_pulses;
  j["min_spacing_fraction"] = p.min_spacing_fraction;
  nlohmann::json fam = nlohmann::json::array();
  for (const auto& fe : p.family) {
    nlohmann::json e;
    e["name"] = fe.name;
    const auto coeffs = p.basis.expand(fe.generator);
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back({c.real(), c.imag()});
    e["generator_pauli_coeffs"] = std::move(cs);
    e["angle_grid_rad"] = fe.angle_grid;
    e["angle_lo_rad"] = fe.angle_lo;
    e["angle_hi_rad"] = fe.angle_hi;
    fam.push_back(std::move(e));
  }
  j["family"] = std::move(fam);
  return j.dump();
}

BBProblem bb_problem_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  BBProblem p;
  p.basis = OperatorBasis::pauli_basis(j.at("n_qubits").get<std::size_t>());
  p.chi_bar = j.at("chi_bar").get<std::vector<double>>();
  p.chi_hat = j.at("chi_hat").get<std::vector<double>>();
  p.max_pulses = j.at("max_pulses").get<std::size_t>();
  p.min_spacing_fraction = j.at("min_spacing_fraction").get<double>();
  for (const auto& e : j.at("family")) {
    PulseFamilyEntry fe;
    fe.name = e.at("name").get<std::string>();
    std::vector<cplx> coeffs;
    for (const auto& c : e.at("generator_pauli_coeffs"))
      coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
    fe.generator = p.basis.reconstruct(coeffs);
    fe.angle_grid = e.at("angle_grid_rad").get<std::vector<double>>();
    fe.angle_lo = e.at("angle_lo_rad").get<double>();
    fe.angle_hi = e.at("angle_hi_rad").get<double>();
    p.family.push_back(std::move(fe));
  }
  return p;
}

std::string bb_solution_to_json(const BBSolution& s, const OperatorBasis& basis) {
  nlohmann::json j;
  j["distance"] = s.distance;
  j["iterations"] = s.iterations;
  j["group_size"] = s.pulses.size();
  j["chi_tilde"] = s.chi_tilde;
  nlohmann::json specs = nlohmann::json::array();
  for (const auto& c : s.specs)
    specs.push_back({{"family_index", c.family_index}, {"angle_rad", c.angle}});
  j["pulses"] = std::move(specs);
  (void)basis;
  return j.dump();
}

}  // namespace ddlab
