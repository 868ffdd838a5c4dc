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

#ifndef DDLAB_OPERATOR_CORE_HPP_
#define DDLAB_OPERATOR_CORE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ddlab/cmat.hpp"

namespace ddlab {

// Module-wide tolerance for operator predicates; overridable per call.
inline constexpr double kDefaultTol = 1e-10;

// Qubit indexing convention used throughout: qubit 1 is the leftmost
// letter of a Pauli label and the most significant tensor factor, so
// pauli("XZ") == X (x) Z acts with X on qubit 1.
CMat pauli_matrix(char letter);
CMat pauli(const std::string& label);
CMat pauli(const std::string& label, std::size_t n_qubits);

// log2 of the dimension; throws if the matrix is not square with a
// power-of-two dimension.
std::size_t n_qubits_of(const CMat& op);

bool is_hermitian(const CMat& a, double tol = kDefaultTol);
bool is_unitary(const CMat& a, double tol = kDefaultTol);
// true iff || ab + ba ||_max < tol
bool anticommutes(const CMat& a, const CMat& b, double tol = kDefaultTol);
bool commutes(const CMat& a, const CMat& b, double tol = kDefaultTol);

// exp(-i * angle * h); h must be Hermitian (input error otherwise).
CMat expm_hamiltonian(const CMat& h, double angle, double tol = kDefaultTol);

// GUE-style seeded random Hermitian (entries N(0,1) symmetrized).
CMat random_hermitian(std::size_t dim, std::mt19937_64& rng);

// Pauli string with a phase in {1, i, -1, -i}, closed under products.
struct PauliString {
  std::string letters;       // over {I,X,Y,Z}
  std::uint8_t phase_i = 0;  // phase = i^phase_i, in {0,1,2,3}

  static PauliString parse(const std::string& letters);
  PauliString operator*(const PauliString& rhs) const;
  cplx phase() const;
  CMat to_matrix() const;  // includes the phase
  std::size_t n_qubits() const { return letters.size(); }
  bool operator==(const PauliString&) const = default;
};

// Ordered Hermitian operator basis {K_a}, K_0 = identity, normalized as
// tr(Ka^dag Kb) = d * delta_ab (unnormalized Pauli strings).
class OperatorBasis {
 public:
  static OperatorBasis pauli_basis(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t(1) << n_qubits_; }
  std::size_t size() const { return elements_.size(); }  // d^2
  const CMat& element(std::size_t a) const { return elements_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  // Index of a Pauli label in the basis ordering.
  std::size_t index_of(const std::string& label) const;

  // c_a = tr(Ka^dag a) / d
  std::vector<cplx> expand(const CMat& a) const;
  CMat reconstruct(const std::vector<cplx>& coeffs) const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<CMat> elements_;
  std::vector<std::string> labels_;
};

}  // namespace ddlab

#endif  // DDLAB_OPERATOR_CORE_HPP_
