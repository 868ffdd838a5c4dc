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

#ifndef DDLAB_CMAT_HPP_
#define DDLAB_CMAT_HPP_

#include <cstddef>
#include <vector>

#include "ddlab/kernels.hpp"

namespace ddlab {

using CVec = std::vector<cplx>;

// Dense complex matrix, row-major, value semantics. Arithmetic routes
// through the runtime-dispatched kernels (scalar or AVX2).
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMat identity(std::size_t n);
  static CMat zero(std::size_t rows, std::size_t cols) { return CMat(rows, cols); }
  // Column vector from amplitudes.
  static CMat col(const CVec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  CMat operator*(const CMat& rhs) const;
  CMat operator+(const CMat& rhs) const;
  CMat operator-(const CMat& rhs) const;
  CMat operator-() const;
  CMat& operator+=(const CMat& rhs);
  CMat& operator-=(const CMat& rhs);
  CMat& operator*=(cplx s);
  friend CMat operator*(cplx s, CMat m) { m *= s; return m; }
  friend CMat operator*(CMat m, cplx s) { m *= s; return m; }

  CMat adjoint() const;
  CMat transpose() const;
  CMat conj() const;
  // adjoint(*this) * rhs without forming the adjoint
  CMat adjoint_times(const CMat& rhs) const;
  // *this * adjoint(rhs)
  CMat times_adjoint(const CMat& rhs) const;

  cplx trace() const;
  // tr(adjoint(*this) * rhs) = entrywise sum conj(a) b
  cplx hs_dot(const CMat& rhs) const;
  double max_abs() const;
  double frobenius_norm() const;

  CMat kron(const CMat& rhs) const;

  bool operator==(const CMat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

double max_abs_diff(const CMat& a, const CMat& b);
CMat commutator(const CMat& a, const CMat& b);      // ab - ba
CMat anticommutator(const CMat& a, const CMat& b);  // ab + ba

// rho -> u rho u^dag
CMat conjugate_by(const CMat& u, const CMat& rho);
// h -> u^dag h u
CMat conjugate_by_adjoint(const CMat& u, const CMat& h);

// Column-stacked vectorization: vec(M)[r + rows*c] = M(r, c).
CVec vec(const CMat& m);
CMat unvec(const CVec& v, std::size_t rows);

CVec kron_vec(const CVec& a, const CVec& b);
CMat outer(const CVec& a, const CVec& b);  // |a><b|
double norm2(const CVec& v);

}  // namespace ddlab

#endif  // DDLAB_CMAT_HPP_
