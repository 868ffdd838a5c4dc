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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ddlab/operator_core.hpp"
#include "oracles.hpp"

using namespace ddlab;

TEST_CASE("pauli materialization") {
  const CMat z = pauli("Z", 1);
  CHECK(z(0, 0) == cplx(1, 0));
  CHECK(z(1, 1) == cplx(-1, 0));
  CHECK(z(0, 1) == cplx(0, 0));

  const CMat xz = pauli("XZ", 2);
  CHECK(xz.rows() == 4);
  CHECK(is_hermitian(xz));
  CHECK(is_unitary(xz));
  // qubit 1 is the leftmost factor: XZ = X (x) Z
  CHECK(xz(0, 2) == cplx(1, 0));
  CHECK(xz(1, 3) == cplx(-1, 0));

  CHECK_THROWS_AS(pauli("ZZ", 3), std::invalid_argument);
  CHECK_THROWS_AS(pauli("QA"), std::invalid_argument);
}

TEST_CASE("anticommutes") {
  CHECK(anticommutes(pauli("X"), pauli("Z")));
  CHECK(anticommutes(pauli("ZZ"), pauli("XI")));
  CHECK_FALSE(anticommutes(pauli("ZZ"), pauli("ZI")));
  CHECK_THROWS_AS(anticommutes(pauli("X"), pauli("XX")), std::invalid_argument);
}

TEST_CASE("expm_hamiltonian closed forms") {
  // exp(-i pi (XX+YY)/2): the paper writes -Z1Z2; the direct
  // eigendecomposition gives +Z1Z2 (global phase apart).
  CMat xbar = pauli("XX") + pauli("YY");
  xbar *= 0.5;
  const CMat kick = expm_hamiltonian(xbar, M_PI);
  CHECK(max_abs_diff(kick, pauli("ZZ")) < 1e-12);
  CHECK(oracles::equal_up_to_phase(kick, pauli("ZZ")));
  CHECK(max_abs_diff(kick, oracles::series_expm(xbar, M_PI)) < 1e-12);

  // zero angle
  CHECK(max_abs_diff(expm_hamiltonian(xbar, 0.0), CMat::identity(4)) < 1e-15);

  // exp(-i pi/2 X) = -iX
  CMat expected = pauli("X");
  expected *= cplx(0, -1);
  CHECK(max_abs_diff(expm_hamiltonian(pauli("X"), M_PI / 2), expected) < 1e-12);

  CMat nonherm(2, 2);
  nonherm(0, 1) = 1;
  CHECK_THROWS_AS(expm_hamiltonian(nonherm, 1.0), std::invalid_argument);
}

TEST_CASE("expm unitarity on random Hermitian inputs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    CMat h = random_hermitian(8, rng);
    h *= cplx(10.0 / std::max(h.max_abs(), 1e-12), 0);
    const CMat u = expm_hamiltonian(h, 1.0);
    CHECK(max_abs_diff(u.adjoint_times(u), CMat::identity(8)) < 1e-12);
    CHECK(max_abs_diff(u, oracles::series_expm(h, 1.0)) < 1e-10);
  }
}

TEST_CASE("expand_in_basis examples") {
  const OperatorBasis basis = OperatorBasis::pauli_basis(2);
  CHECK(basis.size() == 16);
  CHECK(max_abs_diff(basis.element(0), CMat::identity(4)) == 0);

  auto c = basis.expand(CMat::identity(4));
  CHECK(std::abs(c[0] - cplx(1, 0)) < 1e-15);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(std::abs(c[i]) < 1e-15);

  CMat zbar = pauli("ZI") - pauli("IZ");
  zbar *= 0.5;
  c = basis.expand(zbar);
  CHECK(std::abs(c[basis.index_of("ZI")] - cplx(0.5, 0)) < 1e-15);
  CHECK(std::abs(c[basis.index_of("IZ")] - cplx(-0.5, 0)) < 1e-15);
  CHECK(std::abs(c[basis.index_of("XX")]) < 1e-15);

  CHECK_THROWS_AS(basis.expand(CMat::identity(2)), std::invalid_argument);
}

TEST_CASE("basis completeness on random operators") {
  const OperatorBasis basis = OperatorBasis::pauli_basis(2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const CMat a = random_hermitian(4, rng);
    const CMat back = basis.reconstruct(basis.expand(a));
    CHECK(max_abs_diff(a, back) < 1e-12);
  }
  // Hilbert-Schmidt normalization tr(Ka^dag Kb) = d delta_ab
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const cplx ip = basis.element(a).hs_dot(basis.element(b));
      if (a == b)
        CHECK(std::abs(ip - cplx(4, 0)) < 1e-12);
      else
        CHECK(std::abs(ip) < 1e-12);
    }
}

TEST_CASE("pauli string group closure") {
  std::mt19937_64 rng(3);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 200; ++trial) {
    std::string a(3, 'I'), b(3, 'I');
    for (int q = 0; q < 3; ++q) {
      a[q] = letters[rng() % 4];
      b[q] = letters[rng() % 4];
    }
    const PauliString pa = PauliString::parse(a);
    const PauliString pb = PauliString::parse(b);
    const PauliString prod = pa * pb;
    CHECK(prod.phase_i < 4);
    // matrix product must match
    CHECK(max_abs_diff(prod.to_matrix(), pa.to_matrix() * pb.to_matrix()) < 1e-12);
  }
  // phase-(+1) Pauli strings materialize Hermitian unitaries
  const PauliString s = PauliString::parse("XYZ");
  CHECK(is_hermitian(s.to_matrix()));
  CHECK(is_unitary(s.to_matrix()));
  // XY = iZ on each factor
  const PauliString xy = PauliString::parse("X") * PauliString::parse("Y");
  CHECK(xy.letters == "Z");
  CHECK(xy.phase() == cplx(0, 1));
}

TEST_CASE("n_qubits_of validates shape") {
  CHECK(n_qubits_of(CMat::identity(8)) == 3);
  CHECK_THROWS_AS(n_qubits_of(CMat(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(n_qubits_of(CMat(2, 4)), std::invalid_argument);
}
