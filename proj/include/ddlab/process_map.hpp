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

#ifndef DDLAB_PROCESS_MAP_HPP_
#define DDLAB_PROCESS_MAP_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "ddlab/operator_core.hpp"

namespace ddlab {

// Process-matrix representation of a completely positive map over a fixed
// Hermitian operator basis: rho -> sum_ab chi_ab Ka rho Kb^dag.
struct ChiProcess {
  OperatorBasis basis;
  CMat chi;          // d^2 x d^2
  double time = 0;   // seconds

  double hermiticity_residual() const;
  // Smallest eigenvalue of the Hermitian part; CP iff > -tol.
  double min_eigenvalue() const;
  // || sum_ab chi_ab Kb^dag Ka - I ||_max; TP iff < tol.
  double tp_residual() const;

  static ChiProcess identity(std::size_t n_qubits);
};

bool is_density_matrix(const CMat& rho, double tol = kDefaultTol);

// rho -> sum_ab chi_ab Ka rho Kb^dag. Input must be a density matrix.
CMat apply_chi(const ChiProcess& p, const CMat& rho, double tol = kDefaultTol);

// Linear map on density matrices, given by its Kraus operators.
struct Channel {
  std::vector<CMat> kraus;

  CMat apply(const CMat& rho) const;
  // || sum_i Ki^dag Ki - I ||_max
  double completeness_residual() const;
  // Superoperator on column-stacked vectorized density matrices.
  CMat superoperator() const;
};

// Seeded random CP trace-preserving channel (random Kraus set).
Channel random_cptp_channel(std::size_t n_qubits, std::size_t n_kraus, std::uint64_t seed);

// Full-rank random density matrix G G^dag / tr.
CMat random_density_matrix(std::size_t dim, std::mt19937_64& rng);

using DensityMap = std::function<CMat(const CMat&)>;

// Additive Gaussian perturbation on reconstructed superoperator entries.
struct ShotNoise {
  double sigma = 0;
  std::uint64_t seed = 0;
};

struct TomographyResult {
  ChiProcess process;
  CMat superop;
  double tp_residual = 0;
  bool trace_preserving = true;  // flag only; non-TP maps are not fatal
};

// Simulated quantum process tomography: probes the map with the d^2
// matrix-unit inputs assembled from basis states and |j>+|k>, |j>+i|k>
// superpositions, reconstructs the superoperator, and changes basis to chi.
TomographyResult tomography(const DensityMap& map, const OperatorBasis& basis,
                            const ShotNoise& noise = {}, double time = 0);
TomographyResult tomography(const Channel& c, const OperatorBasis& basis,
                            const ShotNoise& noise = {}, double time = 0);

// Representation changes (column-stacking convention).
CMat superop_of_chi(const ChiProcess& p);
CMat chi_of_superop(const CMat& superop, const OperatorBasis& basis);
CMat choi_of_superop(const CMat& superop, std::size_t d);

// First-order short-time generator: chi_bar_a = Im(chi^{(1)}_{a0}(tau)),
// fitted linearly through the origin over the given tau points and scaled
// to tau = tau_points[0]. The reconstructed S(tau) = sum_{a>=1} chi_bar_a Ka
// satisfies rho(tau) ~= rho + i[S(tau), rho]; for a Hamiltonian family H
// this gives S(tau) = -H*tau (pinned by test against the Taylor oracle).
struct ShortTimeGenerator {
  OperatorBasis basis;
  std::vector<double> chi_bar;  // indexed a-1 for a in [1, d^2)
  double tau = 0;
  double fit_residual = 0;
  bool expansion_valid = true;

  CMat reconstruct() const;  // S(tau), Hermitian
};

ShortTimeGenerator short_time_generator(const std::function<ChiProcess(double)>& family,
                                        const std::vector<double>& tau_points,
                                        double residual_threshold = 1e-2);

// Eq-(5)-style commutator form: S = (i/2) sum_{a>=1} [chi_a0 Ka - chi_0a Ka^dag]
// plus the a,b >= 1 dissipator block. With the implicit rho(0) term restored,
// rho + (-i)[S,rho] + (1/2) sum chi_ab ([Ka rho Kb^dag ... ]) reproduces
// apply_chi exactly for trace-preserving processes.
struct CommutatorForm {
  CMat s;
  CMat dissipator_block;  // (d^2-1) x (d^2-1)
};

CommutatorForm commutator_form(const ChiProcess& p);
// Evaluates rho + (-i)[S,rho] + dissipator action (the Eq-(4) right-hand
// side with the identity term restored).
CMat apply_commutator_form(const CommutatorForm& f, const OperatorBasis& basis,
                           const CMat& rho);

// JSON round trip: {n_qubits, basis:"pauli", time, chi:[[re,im],...]} row-major.
std::string chi_to_json(const ChiProcess& p);
ChiProcess chi_from_json(const std::string& text);

}  // namespace ddlab

#endif  // DDLAB_PROCESS_MAP_HPP_
