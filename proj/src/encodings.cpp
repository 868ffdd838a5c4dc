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

#include "ddlab/encodings.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ddlab/eig.hpp"

namespace ddlab {

CMat CodeSpace::projector() const { return isometry.times_adjoint(isometry); }

CodeSpace build_dfs(std::size_t n_blocks) {
  if (n_blocks < 1) throw std::invalid_argument("build_dfs: n_blocks must be >= 1");
  CodeSpace code;
  code.n_physical = 2 * n_blocks;
  code.n_logical = n_blocks;
  const std::size_t d_phys = std::size_t(1) << code.n_physical;
  const std::size_t d_log = std::size_t(1) << code.n_logical;

  // |0_L> = |01>, |1_L> = |10> per block; block i occupies physical qubits
  // 2i-1, 2i (qubit 1 leftmost).
  code.isometry = CMat(d_phys, d_log);
  for (std::size_t l = 0; l < d_log; ++l) {
    std::size_t phys = 0;
    for (std::size_t b = 0; b < n_blocks; ++b) {
      const std::size_t bit = (l >> (n_blocks - 1 - b)) & 1;
      // logical 0 -> physical bits 01, logical 1 -> 10
      phys = (phys << 2) | (bit ? 0b10 : 0b01);
    }
    code.isometry(phys, l) = 1;
  }

  auto block_label = [&](std::size_t b, char first, char second) {
    std::string s(code.n_physical, 'I');
    s[2 * b] = first;
    s[2 * b + 1] = second;
    return s;
  };
  for (std::size_t b = 0; b < n_blocks; ++b) {
    const std::string suffix = n_blocks == 1 ? "" : std::to_string(b + 1);
    CMat xbar = pauli(block_label(b, 'X', 'X')) + pauli(block_label(b, 'Y', 'Y'));
    xbar *= 0.5;
    CMat zbar = pauli(block_label(b, 'Z', 'I')) - pauli(block_label(b, 'I', 'Z'));
    zbar *= 0.5;
    // (i/2)[Xbar, Zbar]; equals +Y on the code block (see tests for the
    // relation to the i[Zbar,Xbar] and (X1Y2-Y1X2)/2 variants).
    CMat ybar = commutator(xbar, zbar);
    ybar *= cplx(0, 0.5);
    code.logical_ops["X" + suffix] = std::move(xbar);
    code.logical_ops["Z" + suffix] = std::move(zbar);
    code.logical_ops["Y" + suffix] = std::move(ybar);
  }
  for (std::size_t b = 0; b + 1 < n_blocks; ++b) {
    // couples qubit 2(b+1) and 2(b+1)+1, i.e. the last qubit of block b
    // and the first of block b+1
    std::string s(code.n_physical, 'I');
    s[2 * b + 1] = 'Z';
    s[2 * b + 2] = 'Z';
    code.logical_ops["ZZ" + std::to_string(b + 1) + std::to_string(b + 2)] = pauli(s);
  }

  code.invariant_span.push_back(CMat::identity(d_phys));
  for (std::size_t b = 0; b < n_blocks; ++b) {
    CMat sz = pauli(block_label(b, 'Z', 'I')) + pauli(block_label(b, 'I', 'Z'));
    code.invariant_span.push_back(std::move(sz));
  }
  return code;
}

ErrorClassification classify_error(const CMat& e, const CodeSpace& code) {
  const std::size_t d = std::size_t(1) << code.n_physical;
  if (e.rows() != d || e.cols() != d)
    throw std::invalid_argument("classify_error: dimension mismatch");

  // Project onto the invariant span (Gram-Schmidt orthonormalized under
  // the Hilbert-Schmidt inner product).
  std::vector<CMat> ortho;
  for (const auto& s : code.invariant_span) {
    CMat q = s;
    for (const auto& o : ortho) {
      const cplx c = o.hs_dot(q);
      kernels::active().axpy(q.data(), -c, o.data(), q.size());
    }
    const double nrm = q.frobenius_norm();
    if (nrm > 1e-12) {
      q *= cplx(1.0 / nrm, 0);
      ortho.push_back(std::move(q));
    }
  }
  ErrorClassification out;
  out.invariant_part = CMat(d, d);
  for (const auto& o : ortho) {
    const cplx c = o.hs_dot(e);
    kernels::active().axpy(out.invariant_part.data(), c, o.data(),
                           out.invariant_part.size());
  }
  CMat r = e - out.invariant_part;

  const CMat p = code.projector();
  const CMat q = CMat::identity(d) - p;
  const CMat pr = p * r;
  out.leakage_part = pr * q + q * r * p;
  CMat on_code = pr * p;
  const cplx code_trace = (code.isometry.adjoint_times(r * code.isometry)).trace();
  const double dim_l = static_cast<double>(std::size_t(1) << code.n_logical);
  out.logical_part = on_code - (code_trace / dim_l) * p;
  out.outside_part = r - out.leakage_part - out.logical_part;

  out.invariant_norm = out.invariant_part.frobenius_norm();
  out.outside_norm = out.outside_part.frobenius_norm();
  out.logical_norm = out.logical_part.frobenius_norm();
  out.leakage_norm = out.leakage_part.frobenius_norm();
  return out;
}

ErrorClassification::Type ErrorClassification::pure_type(double tol) const {
  const double total = std::max({invariant_norm, outside_norm, logical_norm, leakage_norm, 1.0});
  const double cut = tol * total;
  int count = 0;
  Type t = Type::kMixed;
  if (invariant_norm > cut) { ++count; t = Type::kInvariant; }
  if (outside_norm > cut) { ++count; t = Type::kOutside; }
  if (logical_norm > cut) { ++count; t = Type::kLogical; }
  if (leakage_norm > cut) { ++count; t = Type::kLeakage; }
  return count == 1 ? t : Type::kMixed;
}

std::vector<std::string> dfs_leakage_labels() {
  return {"XI", "IX", "YI", "IY", "XZ", "ZX", "YZ", "ZY"};
}

Theorem1Report theorem1_check(const CodeSpace& code, const std::vector<CMat>& logical_gates,
                              std::size_t trials, std::uint64_t seed,
                              std::size_t max_group_size) {
  const std::size_t d = std::size_t(1) << code.n_physical;
  const CMat p = code.projector();
  const CMat q = CMat::identity(d) - p;
  for (const auto& g : logical_gates) {
    if (g.rows() != d) throw std::invalid_argument("theorem1_check: gate dimension mismatch");
    if ((q * g * p).max_abs() > 1e-8)
      throw std::invalid_argument("theorem1_check: generator leaks out of the code space");
  }
  PulseGroup group = close_group(logical_gates, max_group_size);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double dim_l = static_cast<double>(std::size_t(1) << code.n_logical);

  Theorem1Report report;
  report.group_size = group.size();
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    CMat h(d, d);
    for (std::size_t i = 0; i < d * d; ++i) h.data()[i] = cplx(gauss(rng), gauss(rng));
    h = h + h.adjoint();
    h *= 0.5;
    const CMat hs = symmetrize(h, group);
    CMat on_code = code.isometry.adjoint_times(hs * code.isometry);
    const cplx lambda = on_code.trace() / dim_l;
    on_code -= lambda * CMat::identity(on_code.rows());
    report.max_code_residual = std::max(report.max_code_residual, on_code.max_abs());
    report.max_leakage_residual =
        std::max(report.max_leakage_residual, (p * hs * q).max_abs());
  }
  return report;
}

StabilizerCode build_bitflip_code() {
  StabilizerCode code;
  code.n_physical = 3;
  code.stabilizer_generators = {PauliString::parse("ZZI"), PauliString::parse("IZZ")};
  code.logical_ops["X"] = PauliString::parse("XXX");
  PauliString ybar = PauliString::parse("YYY");
  ybar.phase_i = 2;  // -Y1Y2Y3
  code.logical_ops["Y"] = ybar;
  code.logical_ops["Z"] = PauliString::parse("ZZZ");
  CVec zero(8), one(8);
  zero[0b000] = 1;
  one[0b111] = 1;
  code.codewords = {zero, one};
  code.syndrome_table[{+1, +1}] = PauliString::parse("III");
  code.syndrome_table[{-1, +1}] = PauliString::parse("XII");
  code.syndrome_table[{-1, -1}] = PauliString::parse("IXI");
  code.syndrome_table[{+1, -1}] = PauliString::parse("IIX");
  code.pulse_set = {PauliString::parse("XXI"), PauliString::parse("IXX"),
                    PauliString::parse("XIX")};
  return code;
}

std::vector<int> pauli_syndrome(const StabilizerCode& code, const PauliString& error) {
  std::vector<int> syn;
  syn.reserve(code.stabilizer_generators.size());
  for (const auto& s : code.stabilizer_generators) {
    int anti = 0;
    for (std::size_t i = 0; i < s.letters.size(); ++i) {
      const char a = s.letters[i], b = error.letters[i];
      if (a != 'I' && b != 'I' && a != b) anti ^= 1;
    }
    syn.push_back(anti ? -1 : +1);
  }
  return syn;
}

namespace {

struct SyndromeSetup {
  std::vector<std::vector<int>> outcomes;
  std::vector<CMat> projectors;  // joint space
  std::vector<CMat> recoveries;  // joint space
};

SyndromeSetup build_syndrome_setup(const StabilizerCode& code, std::size_t bath_dim) {
  const std::size_t d = std::size_t(1) << code.n_physical;
  const std::size_t n_gen = code.stabilizer_generators.size();
  SyndromeSetup setup;
  const CMat id = CMat::identity(d);
  for (std::size_t mask = 0; mask < (std::size_t(1) << n_gen); ++mask) {
    std::vector<int> outcome(n_gen);
    CMat proj = id;
    for (std::size_t i = 0; i < n_gen; ++i) {
      outcome[i] = (mask >> i) & 1 ? -1 : +1;
      CMat m = code.stabilizer_generators[i].to_matrix();
      m *= cplx(0.5 * outcome[i], 0);
      CMat half = 0.5 * id + m;
      proj = half * proj;
    }
    const auto it = code.syndrome_table.find(outcome);
    if (it == code.syndrome_table.end())
      throw std::invalid_argument("qecc_bb_cycle: syndrome table is incomplete");
    CMat rec = it->second.to_matrix();
    setup.outcomes.push_back(outcome);
    setup.projectors.push_back(bath_dim == 1 ? proj : proj.kron(CMat::identity(bath_dim)));
    setup.recoveries.push_back(bath_dim == 1 ? rec : rec.kron(CMat::identity(bath_dim)));
  }
  return setup;
}

}  // namespace

QeccResult qecc_bb_cycle(const StabilizerCode& code, const CMat& h_noise_joint,
                         const QeccSchedule& schedule, std::size_t n_rounds,
                         std::uint64_t seed) {
  if (schedule.pulses_during_recovery)
    throw std::invalid_argument(
        "qecc_bb_cycle: pulses may not be scheduled inside the recovery window");
  if (schedule.delta_t <= 0) throw std::invalid_argument("qecc_bb_cycle: delta_t must be > 0");
  const std::size_t d_sys = std::size_t(1) << code.n_physical;
  if (h_noise_joint.rows() % d_sys != 0)
    throw std::invalid_argument("qecc_bb_cycle: noise dimension mismatch");
  const std::size_t bath_dim = h_noise_joint.rows() / d_sys;

  std::vector<CMat> pulse_gens;
  for (const auto& ps : code.pulse_set) pulse_gens.push_back(ps.to_matrix());
  PulseGroup group = close_group(pulse_gens, 16);

  // Round propagators, shared by every trial (the noise Hamiltonian is
  // fixed; trials differ in initial states and measurement randomness).
  // BB cycle unitary: product over k of Uk^dag F Uk; the unpulsed arm gets
  // the same total free time.
  const CMat free_total =
      expm_hermitian(h_noise_joint, schedule.delta_t * static_cast<double>(group.size()));
  CMat u_bb = CMat::identity(h_noise_joint.rows());
  {
    const CMat f = expm_hermitian(h_noise_joint, schedule.delta_t);
    for (std::size_t k = 0; k < group.size(); ++k) {
      const CMat uj = bath_dim == 1 ? group.elements[k]
                                    : group.elements[k].kron(CMat::identity(bath_dim));
      u_bb = uj.adjoint() * f * uj * u_bb;
    }
  }
  CMat round_bb = CMat::identity(u_bb.rows());
  CMat round_nobb = CMat::identity(u_bb.rows());
  for (std::size_t c = 0; c < schedule.cycles_per_round; ++c) {
    round_bb = u_bb * round_bb;
    round_nobb = free_total * round_nobb;
  }

  const SyndromeSetup syndromes = build_syndrome_setup(code, bath_dim);

  QeccResult result;
  result.fidelity_bb.reserve(n_rounds);
  result.fidelity_nobb.reserve(n_rounds);

  // Both arms consume identical random streams.
  auto run_arm = [&](const CMat& round_u, std::vector<double>& fids) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    // random logical state
    const double theta = std::acos(2 * unif(rng) - 1);
    const double phi = 2 * M_PI * unif(rng);
    CVec psi_l(d_sys);
    for (std::size_t i = 0; i < d_sys; ++i)
      psi_l[i] = std::cos(theta / 2) * code.codewords[0][i] +
                 std::exp(cplx(0, phi)) * std::sin(theta / 2) * code.codewords[1][i];
    CVec bath(bath_dim);
    for (auto& b : bath) b = cplx(gauss(rng), gauss(rng));
    const double bn = norm2(bath);
    for (auto& b : bath) b /= bn;
    const CVec joint = bath_dim == 1 ? psi_l : kron_vec(psi_l, bath);
    CMat rho = outer(joint, joint);

    fids.clear();
    for (std::size_t r = 0; r < n_rounds; ++r) {
      rho = conjugate_by(round_u, rho);
      // projective syndrome measurement, Born-sampled
      std::vector<double> probs(syndromes.projectors.size());
      double total = 0;
      for (std::size_t s = 0; s < probs.size(); ++s) {
        probs[s] = std::max((syndromes.projectors[s] * rho).trace().real(), 0.0);
        total += probs[s];
      }
      const double u = unif(rng) * total;
      double acc = 0;
      std::size_t pick = probs.size() - 1;
      for (std::size_t s = 0; s < probs.size(); ++s) {
        acc += probs[s];
        if (u <= acc) { pick = s; break; }
      }
      rho = conjugate_by(syndromes.projectors[pick], rho);
      rho *= cplx(1.0 / std::max(probs[pick], 1e-300), 0);
      rho = conjugate_by(syndromes.recoveries[pick], rho);
      const CMat sys = partial_trace_bath(rho, d_sys);
      fids.push_back(fidelity(sys, psi_l));
    }
  };

  run_arm(round_bb, result.fidelity_bb);
  run_arm(round_nobb, result.fidelity_nobb);
  return result;
}

namespace {

nlohmann::json amplitudes(const CVec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : v) arr.push_back({a.real(), a.imag()});
  return arr;
}

std::string pauli_string_label(const PauliString& p) {
  static const char* phases[4] = {"", "i", "-", "-i"};
  return phases[p.phase_i % 4] + p.letters;
}

}  // namespace

std::string code_space_to_json(const CodeSpace& code) {
  nlohmann::json j;
  j["n_physical"] = code.n_physical;
  j["n_logical"] = code.n_logical;
  nlohmann::json words = nlohmann::json::array();
  for (std::size_t l = 0; l < code.isometry.cols(); ++l) {
    CVec w(code.isometry.rows());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = code.isometry(i, l);
    words.push_back(amplitudes(w));
  }
  j["codewords"] = std::move(words);
  const OperatorBasis basis = OperatorBasis::pauli_basis(code.n_physical);
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [name, op] : code.logical_ops) {
    nlohmann::json entry = nlohmann::json::object();
    const auto coeffs = basis.expand(op);
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
      if (std::abs(coeffs[a]) < 1e-14) continue;
      entry[basis.label(a)] = {coeffs[a].real(), coeffs[a].imag()};
    }
    ops[name] = std::move(entry);
  }
  j["logical_ops"] = std::move(ops);
  return j.dump();
}

std::string stabilizer_code_to_json(const StabilizerCode& code) {
  nlohmann::json j;
  j["n_physical"] = code.n_physical;
  nlohmann::json words = nlohmann::json::array();
  for (const auto& w : code.codewords) words.push_back(amplitudes(w));
  j["codewords"] = std::move(words);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : code.stabilizer_generators) gens.push_back(pauli_string_label(g));
  j["stabilizer_generators"] = std::move(gens);
  nlohmann::json ops = nlohmann::json::object();
  for (const auto& [name, op] : code.logical_ops) ops[name] = pauli_string_label(op);
  j["logical_ops"] = std::move(ops);
  nlohmann::json pulses = nlohmann::json::array();
  for (const auto& p : code.pulse_set) pulses.push_back(pauli_string_label(p));
  j["pulse_set"] = std::move(pulses);
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [syn, rec] : code.syndrome_table)
    table.push_back({{"syndrome", syn}, {"recovery", pauli_string_label(rec)}});
  j["syndrome_table"] = std::move(table);
  return j.dump();
}

}  // namespace ddlab
