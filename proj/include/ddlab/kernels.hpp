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

#ifndef DDLAB_KERNELS_HPP_
#define DDLAB_KERNELS_HPP_

#include <complex>
#include <cstddef>

namespace ddlab {

using cplx = std::complex<double>;

namespace kernels {

// Low-level dense complex kernels. All matrices are row-major and may
// be rectangular. The scalar table is the reference implementation; the
// AVX2 table must agree with it to floating-point reassociation error
// (equivalence-tested in tests/test_kernels.cpp).
struct Ops {
  // c = a (m x k) * b (k x n)
  void (*matmul)(cplx* c, const cplx* a, const cplx* b, std::size_t m,
                 std::size_t k, std::size_t n);
  // c = adjoint(a) * b, where a is (k x m), b is (k x n)
  void (*matmul_adj_l)(cplx* c, const cplx* a, const cplx* b, std::size_t m,
                       std::size_t k, std::size_t n);
  // c = a * adjoint(b), where a is (m x k), b is (n x k)
  void (*matmul_adj_r)(cplx* c, const cplx* a, const cplx* b, std::size_t m,
                       std::size_t k, std::size_t n);
  // y += alpha * x
  void (*axpy)(cplx* y, cplx alpha, const cplx* x, std::size_t len);
  // y *= alpha
  void (*scale)(cplx* y, cplx alpha, std::size_t len);
  // sum_i conj(a_i) * b_i
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t len);
  double (*max_abs)(const cplx* a, std::size_t len);
  double (*max_abs_diff)(const cplx* a, const cplx* b, std::size_t len);
  const char* name;
};

enum class Backend { kAuto, kScalar, kAvx2 };

// Active kernel table. Selected once: DDLAB_KERNELS env var ("scalar",
// "avx2", "auto") if set, otherwise CPU detection.
const Ops& active();

// Force a backend (tests, CLI determinism knobs). Throws std::runtime_error
// if the requested backend is unsupported on this CPU.
void force_backend(Backend b);

const Ops& scalar_ops();
// nullptr when this build or CPU lacks AVX2+FMA.
const Ops* avx2_ops();

}  // namespace kernels
}  // namespace ddlab

#endif  // DDLAB_KERNELS_HPP_
