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

#include "ddlab/operator_core.hpp"

#include <stdexcept>

#include "ddlab/eig.hpp"

namespace ddlab {

CMat pauli_matrix(char letter) {
  CMat m(2, 2);
  switch (letter) {
    case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Y': m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    default:
      throw std::invalid_argument(std::string("pauli: invalid letter '") + letter + "'");
  }
  return m;
}

CMat pauli(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("pauli: empty label");
  CMat out = pauli_matrix(label[0]);
  for (std::size_t i = 1; i < label.size(); ++i) out = out.kron(pauli_matrix(label[i]));
  return out;
}

CMat pauli(const std::string& label, std::size_t n_qubits) {
  if (label.size() != n_qubits)
    throw std::invalid_argument("pauli: label length " + std::to_string(label.size()) +
                                " != n_qubits " + std::to_string(n_qubits));
  return pauli(label);
}

std::size_t n_qubits_of(const CMat& op) {
  if (!op.is_square()) throw std::invalid_argument("n_qubits_of: non-square operator");
  std::size_t d = op.rows(), n = 0;
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument("n_qubits_of: dimension not a power of two");
    d /= 2;
    ++n;
  }
  return n;
}

bool is_hermitian(const CMat& a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(a, a.adjoint()) < tol;
}

bool is_unitary(const CMat& a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(a.adjoint_times(a), CMat::identity(a.rows())) < tol;
}

bool anticommutes(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("anticommutes: dimension mismatch");
  return anticommutator(a, b).max_abs() < tol;
}

bool commutes(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutes: dimension mismatch");
  return commutator(a, b).max_abs() < tol;
}

CMat expm_hamiltonian(const CMat& h, double angle, double tol) {
  if (!is_hermitian(h, tol)) throw std::invalid_argument("expm_hamiltonian: non-Hermitian input");
  return expm_hermitian(h, angle);
}

CMat random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat h(dim, dim);
  for (std::size_t i = 0; i < dim * dim; ++i) h.data()[i] = cplx(gauss(rng), gauss(rng));
  h = h + h.adjoint();
  h *= 0.5;
  return h;
}

namespace {

// Single-qubit products: (a, b) -> (letter, power of i).
struct LetterProduct {
  char letter;
  std::uint8_t phase_i;
};

LetterProduct letter_product(char a, char b) {
  if (a == 'I') return {b, 0};
  if (b == 'I') return {a, 0};
  if (a == b) return {'I', 0};
  // XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i (i^3).
  auto fwd = [](char x, char y) -> char {
    if (x == 'X' && y == 'Y') return 'Z';
    if (x == 'Y' && y == 'Z') return 'X';
    if (x == 'Z' && y == 'X') return 'Y';
    return 0;
  };
  if (char r = fwd(a, b)) return {r, 1};
  return {fwd(b, a), 3};
}

}  // namespace

PauliString PauliString::parse(const std::string& letters) {
  for (char c : letters)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw std::invalid_argument(std::string("PauliString: invalid letter '") + c + "'");
  return {letters, 0};
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (letters.size() != rhs.letters.size())
    throw std::invalid_argument("PauliString: length mismatch in product");
  PauliString out;
  out.letters.resize(letters.size());
  out.phase_i = static_cast<std::uint8_t>((phase_i + rhs.phase_i) % 4);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto [l, p] = letter_product(letters[i], rhs.letters[i]);
    out.letters[i] = l;
    out.phase_i = static_cast<std::uint8_t>((out.phase_i + p) % 4);
  }
  return out;
}

cplx PauliString::phase() const {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_i % 4];
}

CMat PauliString::to_matrix() const {
  CMat m = pauli(letters);
  m *= phase();
  return m;
}

OperatorBasis OperatorBasis::pauli_basis(std::size_t n_qubits) {
  OperatorBasis b;
  b.n_qubits_ = n_qubits;
  const std::size_t count = std::size_t(1) << (2 * n_qubits);
  b.elements_.reserve(count);
  b.labels_.reserve(count);
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (std::size_t a = 0; a < count; ++a) {
    std::string label(n_qubits, 'I');
    std::size_t rest = a;
    for (std::size_t q = n_qubits; q-- > 0;) {
      label[q] = letters[rest % 4];
      rest /= 4;
    }
    b.labels_.push_back(label);
    b.elements_.push_back(pauli(label));
  }
  return b;
}

std::size_t OperatorBasis::index_of(const std::string& label) const {
  if (label.size() != n_qubits_) throw std::invalid_argument("OperatorBasis: bad label length");
  std::size_t idx = 0;
  for (char c : label) {
    std::size_t v;
    switch (c) {
      case 'I': v = 0; break;
      case 'X': v = 1; break;
      case 'Y': v = 2; break;
      case 'Z': v = 3; break;
      default: throw std::invalid_argument("OperatorBasis: bad label letter");
    }
    idx = idx * 4 + v;
  }
  return idx;
}

std::vector<cplx> OperatorBasis::expand(const CMat& a) const {
  if (a.rows() != dim() || a.cols() != dim())
    throw std::invalid_argument("OperatorBasis::expand: dimension mismatch");
  std::vector<cplx> c(size());
  const double d = static_cast<double>(dim());
  for (std::size_t i = 0; i < size(); ++i) c[i] = elements_[i].hs_dot(a) / d;
  return c;
}

CMat OperatorBasis::reconstruct(const std::vector<cplx>& coeffs) const {
  if (coeffs.size() != size())
    throw std::invalid_argument("OperatorBasis::reconstruct: coefficient count mismatch");
  CMat out(dim(), dim());
  for (std::size_t i = 0; i < size(); ++i)
    kernels::active().axpy(out.data(), coeffs[i], elements_[i].data(), out.size());
  return out;
}

}  // namespace ddlab
