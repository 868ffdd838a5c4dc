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

#include "ddlab/cmat.hpp"

#include <cmath>
#include <stdexcept>

namespace ddlab {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::col(const CVec& v) {
  CMat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

CMat CMat::operator*(const CMat& rhs) const {
  require(cols_ == rhs.rows_, "CMat::operator*: dimension mismatch");
  CMat out(rows_, rhs.cols_);
  kernels::active().matmul(out.data(), data(), rhs.data(), rows_, cols_, rhs.cols_);
  return out;
}

CMat CMat::adjoint_times(const CMat& rhs) const {
  require(rows_ == rhs.rows_, "CMat::adjoint_times: dimension mismatch");
  CMat out(cols_, rhs.cols_);
  kernels::active().matmul_adj_l(out.data(), data(), rhs.data(), cols_, rows_, rhs.cols_);
  return out;
}

CMat CMat::times_adjoint(const CMat& rhs) const {
  require(cols_ == rhs.cols_, "CMat::times_adjoint: dimension mismatch");
  CMat out(rows_, rhs.rows_);
  kernels::active().matmul_adj_r(out.data(), data(), rhs.data(), rows_, cols_, rhs.rows_);
  return out;
}

CMat CMat::operator+(const CMat& rhs) const {
  CMat out = *this;
  out += rhs;
  return out;
}

CMat CMat::operator-(const CMat& rhs) const {
  CMat out = *this;
  out -= rhs;
  return out;
}

CMat CMat::operator-() const {
  CMat out = *this;
  out *= cplx(-1.0, 0.0);
  return out;
}

CMat& CMat::operator+=(const CMat& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "CMat::operator+=: shape mismatch");
  kernels::active().axpy(data(), cplx(1.0, 0.0), rhs.data(), size());
  return *this;
}

CMat& CMat::operator-=(const CMat& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "CMat::operator-=: shape mismatch");
  kernels::active().axpy(data(), cplx(-1.0, 0.0), rhs.data(), size());
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  kernels::active().scale(data(), s, size());
  return *this;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMat CMat::transpose() const {
  CMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

CMat CMat::conj() const {
  CMat out(rows_, cols_);
  for (std::size_t i = 0; i < size(); ++i) out.data()[i] = std::conj(data()[i]);
  return out;
}

cplx CMat::trace() const {
  require(is_square(), "CMat::trace: non-square");
  cplx t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

cplx CMat::hs_dot(const CMat& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "CMat::hs_dot: shape mismatch");
  return kernels::active().dotc(data(), rhs.data(), size());
}

double CMat::max_abs() const { return kernels::active().max_abs(data(), size()); }

double CMat::frobenius_norm() const {
  return std::sqrt(std::abs(hs_dot(*this)));
}

CMat CMat::kron(const CMat& rhs) const {
  CMat out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const cplx aij = (*this)(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t l = 0; l < rhs.cols_; ++l)
          out(i * rhs.rows_ + k, j * rhs.cols_ + l) = aij * rhs(k, l);
    }
  return out;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  return kernels::active().max_abs_diff(a.data(), b.data(), a.size());
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }
CMat anticommutator(const CMat& a, const CMat& b) { return a * b + b * a; }

CMat conjugate_by(const CMat& u, const CMat& rho) { return (u * rho).times_adjoint(u); }
CMat conjugate_by_adjoint(const CMat& u, const CMat& h) { return u.adjoint_times(h * u); }

CVec vec(const CMat& m) {
  CVec v(m.size());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) v[r + m.rows() * c] = m(r, c);
  return v;
}

CMat unvec(const CVec& v, std::size_t rows) {
  const std::size_t cols = v.size() / rows;
  CMat m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[r + rows * c];
  return m;
}

CVec kron_vec(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

CMat outer(const CVec& a, const CVec& b) {
  CMat m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

double norm2(const CVec& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace ddlab
