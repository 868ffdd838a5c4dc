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

#ifndef DDLAB_EIG_HPP_
#define DDLAB_EIG_HPP_

#include <vector>

#include "ddlab/cmat.hpp"

namespace ddlab {

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  CMat eigenvectors;                // columns
};

// Hermitian eigendecomposition (the input is assumed Hermitian; only the
// lower triangle is trusted).
EighResult eigh(const CMat& h);

double min_eigenvalue_hermitian(const CMat& h);

// exp(-i * angle * h) for Hermitian h, via eigendecomposition. Unitary to
// machine precision by construction.
CMat expm_hermitian(const CMat& h, double angle);

// Hermitian generator g with exp(-i g) == u (principal branch of the log
// of a unitary). Used to model finite-width pulses for group elements
// whose generating Hamiltonian is not otherwise known.
CMat principal_log_generator(const CMat& u);

}  // namespace ddlab

#endif  // DDLAB_EIG_HPP_
