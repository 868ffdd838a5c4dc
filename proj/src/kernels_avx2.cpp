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

// AVX2+FMA variants of the dense complex kernels. Each __m256d holds two
// interleaved complex doubles [re0, im0, re1, im1]. Compiled with
// -mavx2 -mfma (see src/CMakeLists.txt); only dispatched to at runtime
// when the CPU reports both features.

#include "ddlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace ddlab::kernels {
namespace {

// [re, im] pairs -> [im, re]
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// y += alpha * x over one vector (two complexes):
//   re: ar*xr - ai*xi,  im: ar*xi + ai*xr
inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d x) {
  __m256d t = _mm256_mul_pd(ai, swap_pairs(x));
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, x, t));
}

void v_axpy(cplx* y, cplx alpha, const cplx* x, std::size_t len) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  auto* yp = reinterpret_cast<double*>(y);
  const auto* xp = reinterpret_cast<const double*>(x);
  for (; i + 2 <= len; i += 2) {
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, cmul_acc(yv, ar, ai, xv));
  }
  for (; i < len; ++i) y[i] += alpha * x[i];
}

void v_scale(cplx* y, cplx alpha, std::size_t len) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  auto* yp = reinterpret_cast<double*>(y);
  for (; i + 2 <= len; i += 2) {
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d t = _mm256_mul_pd(ai, swap_pairs(yv));
    _mm256_storeu_pd(yp + 2 * i, _mm256_fmaddsub_pd(ar, yv, t));
  }
  for (; i < len; ++i) y[i] *= alpha;
}

cplx v_dotc(const cplx* a, const cplx* b, std::size_t len) {
  // re += ar*br + ai*bi ; im += ar*bi - ai*br
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d neg_even = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
  const auto* ap = reinterpret_cast<const double*>(a);
  const auto* bp = reinterpret_cast<const double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d av = _mm256_loadu_pd(ap + 2 * i);
    __m256d bv = _mm256_loadu_pd(bp + 2 * i);
    acc_re = _mm256_fmadd_pd(av, bv, acc_re);
    // [-ai, ar] * [br, bi] summed in pairs gives ar*bi - ai*br
    __m256d as = _mm256_mul_pd(swap_pairs(av), neg_even);
    acc_im = _mm256_fmadd_pd(as, bv, acc_im);
  }
  alignas(32) double re4[4], im4[4];
  _mm256_store_pd(re4, acc_re);
  _mm256_store_pd(im4, acc_im);
  cplx acc(re4[0] + re4[1] + re4[2] + re4[3], im4[0] + im4[1] + im4[2] + im4[3]);
  for (; i < len; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void v_matmul(cplx* c, const cplx* a, const cplx* b, std::size_t m,
              std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) v_axpy(c + i * n, a[i * k + l], b + l * n, n);
}

void v_matmul_adj_l(cplx* c, const cplx* a, const cplx* b, std::size_t m,
                    std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx(0.0, 0.0));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < m; ++i)
      v_axpy(c + i * n, std::conj(a[l * m + i]), b + l * n, n);
}

void v_matmul_adj_r(cplx* c, const cplx* a, const cplx* b, std::size_t m,
                    std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i * n + j] = std::conj(v_dotc(a + i * k, b + j * k, k));
}

double v_max_abs(const cplx* a, std::size_t len) {
  __m256d best = _mm256_setzero_pd();
  const auto* ap = reinterpret_cast<const double*>(a);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d v = _mm256_loadu_pd(ap + 2 * i);
    __m256d sq = _mm256_mul_pd(v, v);
    // pairwise re^2+im^2 in lanes 0 and 2
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double b4[4];
  _mm256_store_pd(b4, best);
  double out = std::max(b4[0], b4[2]);
  for (; i < len; ++i) out = std::max(out, std::norm(a[i]));
  return std::sqrt(out);
}

double v_max_abs_diff(const cplx* a, const cplx* b, std::size_t len) {
  __m256d best = _mm256_setzero_pd();
  const auto* ap = reinterpret_cast<const double*>(a);
  const auto* bp = reinterpret_cast<const double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ap + 2 * i), _mm256_loadu_pd(bp + 2 * i));
    __m256d sq = _mm256_mul_pd(d, d);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double b4[4];
  _mm256_store_pd(b4, best);
  double out = std::max(b4[0], b4[2]);
  for (; i < len; ++i) out = std::max(out, std::norm(a[i] - b[i]));
  return std::sqrt(out);
}

}  // namespace

const Ops* avx2_ops() {
  static const Ops ops = {v_matmul, v_matmul_adj_l, v_matmul_adj_r, v_axpy,
                          v_scale,  v_dotc,         v_max_abs,      v_max_abs_diff,
                          "avx2"};
  return &ops;
}

}  // namespace ddlab::kernels

#else  // non-x86: no AVX2 table; dispatcher falls back to scalar.

namespace ddlab::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace ddlab::kernels

#endif
