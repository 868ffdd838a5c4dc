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

// Reference (scalar) implementations of the dense complex kernels.

#include <algorithm>
#include <cmath>

#include "ddlab/kernels.hpp"

namespace ddlab::kernels {
namespace {

void s_axpy(cplx* y, cplx alpha, const cplx* x, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

void s_scale(cplx* y, cplx alpha, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] *= alpha;
}

cplx s_dotc(const cplx* a, const cplx* b, std::size_t len) {
  cplx acc = 0;
  for (std::size_t i = 0; i < len; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void s_matmul(cplx* c, const cplx* a, const cplx* b, std::size_t m,
              std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) s_axpy(c + i * n, a[i * k + l], b + l * n, n);
}

void s_matmul_adj_l(cplx* c, const cplx* a, const cplx* b, std::size_t m,
                    std::size_t k, std::size_t n) {
  // a is (k x m); C[i,:] = sum_l conj(A[l,i]) * B[l,:]
  std::fill(c, c + m * n, cplx(0.0, 0.0));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < m; ++i)
      s_axpy(c + i * n, std::conj(a[l * m + i]), b + l * n, n);
}

void s_matmul_adj_r(cplx* c, const cplx* a, const cplx* b, std::size_t m,
                    std::size_t k, std::size_t n) {
  // b is (n x k); C[i,j] = sum_l A[i,l] conj(B[j,l]) = conj(dotc(a_row_i, b_row_j))
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i * n + j] = std::conj(s_dotc(a + i * k, b + j * k, k));
}

double s_max_abs(const cplx* a, std::size_t len) {
  double best = 0;
  for (std::size_t i = 0; i < len; ++i)
    best = std::max(best, std::norm(a[i]));
  return std::sqrt(best);
}

double s_max_abs_diff(const cplx* a, const cplx* b, std::size_t len) {
  double best = 0;
  for (std::size_t i = 0; i < len; ++i)
    best = std::max(best, std::norm(a[i] - b[i]));
  return std::sqrt(best);
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {s_matmul, s_matmul_adj_l, s_matmul_adj_r, s_axpy,
                          s_scale,  s_dotc,         s_max_abs,      s_max_abs_diff,
                          "scalar"};
  return ops;
}

}  // namespace ddlab::kernels
