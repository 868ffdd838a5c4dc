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

// The only translation unit that touches Eigen.

#include "ddlab/eig.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace ddlab {

namespace {

using EMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::RowMajor>;

EMat to_eigen(const CMat& m) {
  return Eigen::Map<const EMat>(m.data(), static_cast<Eigen::Index>(m.rows()),
                                static_cast<Eigen::Index>(m.cols()));
}

CMat from_eigen(const EMat& e) {
  CMat m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  Eigen::Map<EMat>(m.data(), e.rows(), e.cols()) = e;
  return m;
}

}  // namespace

EighResult eigh(const CMat& h) {
  if (!h.is_square()) throw std::invalid_argument("eigh: non-square input");
  Eigen::SelfAdjointEigenSolver<EMat> solver(to_eigen(h));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: failed to converge");
  EighResult out;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + h.rows());
  out.eigenvectors = from_eigen(solver.eigenvectors());
  return out;
}

double min_eigenvalue_hermitian(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<EMat> solver(to_eigen(h), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: failed to converge");
  return solver.eigenvalues().minCoeff();
}

CMat expm_hermitian(const CMat& h, double angle) {
  Eigen::SelfAdjointEigenSolver<EMat> solver(to_eigen(h));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: failed to converge");
  const auto& v = solver.eigenvectors();
  Eigen::VectorXcd phases(v.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i)
    phases(i) = std::exp(std::complex<double>(0.0, -angle * solver.eigenvalues()(i)));
  EMat result = v * phases.asDiagonal() * v.adjoint();
  return from_eigen(result);
}

CMat principal_log_generator(const CMat& u) {
  if (!u.is_square()) throw std::invalid_argument("principal_log_generator: non-square");
  Eigen::ComplexEigenSolver<EMat> solver(to_eigen(u));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("principal_log_generator: eigensolver failed");
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  // A unitary is normal, so its eigenvector matrix is unitary up to
  // roundoff; g = V diag(-arg lambda) V^dag is Hermitian with exp(-ig) = u.
  Eigen::VectorXcd gene(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) gene(i) = -std::arg(vals(i));
  EMat g = vecs * gene.asDiagonal() * vecs.adjoint();
  g = (g + g.adjoint()) / 2.0;
  return from_eigen(g);
}

}  // namespace ddlab
