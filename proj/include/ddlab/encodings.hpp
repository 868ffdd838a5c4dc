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

#ifndef DDLAB_ENCODINGS_HPP_
#define DDLAB_ENCODINGS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ddlab/decoupling.hpp"
#include "ddlab/operator_core.hpp"

namespace ddlab {

// Isometry from logical to physical Hilbert space plus logical operators.
// invariant_span lists the operators the code is inert to (identity plus
// the code's annihilators); classify_error projects onto it.
struct CodeSpace {
  std::size_t n_physical = 0;
  std::size_t n_logical = 0;
  CMat isometry;  // 2^n_physical x 2^n_logical
  std::map<std::string, CMat> logical_ops;
  std::vector<CMat> invariant_span;

  CMat projector() const;  // V V^dag
};

// Two-qubit-per-block DFS: |0_L> = |01>, |1_L> = |10> per block.
// Logical ops per block i: "X1".."Xn" = (X X + Y Y)/2 on the block,
// "Z1".."Zn" = (Z - Z)/2, "Y1".."Yn" = (i/2)[Xbar, Zbar]; neighboring
// blocks get "ZZ12" etc. = Z_{2i} Z_{2i+1}. For one block the names are
// "X", "Y", "Z".
CodeSpace build_dfs(std::size_t n_blocks);

// Hilbert-Schmidt-orthogonal four-way split of an error operator:
//   invariant: projection onto the code's invariant span;
//   leakage:   off-diagonal blocks P e Q + Q e P of the remainder;
//   logical:   traceless on-code block of the remainder;
//   outside:   what is left (supported outside the code up to a harmless
//              multiple of the code projector).
struct ErrorClassification {
  CMat invariant_part, outside_part, logical_part, leakage_part;
  double invariant_norm = 0, outside_norm = 0, logical_norm = 0, leakage_norm = 0;

  enum class Type { kInvariant, kOutside, kLogical, kLeakage, kMixed };
  Type pure_type(double tol = kDefaultTol) const;
};

ErrorClassification classify_error(const CMat& e, const CodeSpace& code);

// The Eq-(10)-style leakage basis for the one-block DFS.
std::vector<std::string> dfs_leakage_labels();

// Symmetrization over the closed group generated by logical gates:
// verifies the on-code block of every symmetrized random Hermitian is
// proportional to identity and that leakage blocks vanish.
struct Theorem1Report {
  std::size_t group_size = 0;
  double max_code_residual = 0;     // || V^dag Hs V - (tr/dim) I ||_max
  double max_leakage_residual = 0;  // || P Hs Q ||_max
  std::size_t trials = 0;

  bool passed(double tol = 1e-10) const {
    return max_code_residual < tol && max_leakage_residual < tol;
  }
};

Theorem1Report theorem1_check(const CodeSpace& code, const std::vector<CMat>& logical_gates,
                              std::size_t trials, std::uint64_t seed,
                              std::size_t max_group_size = 64);

// Stabilizer code with syndrome table and the paper's pulse set.
struct StabilizerCode {
  std::size_t n_physical = 0;
  std::vector<PauliString> stabilizer_generators;  // measured for syndromes
  std::map<std::string, PauliString> logical_ops;
  std::vector<CVec> codewords;
  // syndrome (one +-1 per generator) -> recovery
  std::map<std::vector<int>, PauliString> syndrome_table;
  std::vector<PauliString> pulse_set;  // BB pulses (S_X for the bit-flip code)
};

// 3-qubit bit-flip code: codewords |000>, |111>; syndrome generators
// {Z1Z2, Z2Z3}; logical {X1X2X3, -Y1Y2Y3, Z1Z2Z3}; pulse set
// S_X = {X1X2, X2X3, X1X3}.
StabilizerCode build_bitflip_code();

// Syndrome of a Pauli error: -1 entries where it anticommutes with a
// stabilizer generator.
std::vector<int> pauli_syndrome(const StabilizerCode& code, const PauliString& error);

struct QeccSchedule {
  double delta_t = 0;            // free segment inside one BB cycle
  std::size_t cycles_per_round = 1;
  bool pulses_during_recovery = false;  // rejected at run time (exclusion rule)
};

struct QeccResult {
  std::vector<double> fidelity_bb;    // after each round, recovered, BB arm
  std::vector<double> fidelity_nobb;  // same seeds, no pulses
};

// Rounds of {free evolution with interleaved pulse-set parity kicks ->
// projective syndrome measurement (Born-sampled, seeded) -> recovery}.
// Both arms share the initial state and measurement randomness stream.
// The noise Hamiltonian acts on n_physical system qubits (x) a bath.
QeccResult qecc_bb_cycle(const StabilizerCode& code, const CMat& h_noise_joint,
                         const QeccSchedule& schedule, std::size_t n_rounds,
                         std::uint64_t seed);

// JSON exports: codewords as amplitude lists, operators as Pauli labels
// (stabilizer codes) or Pauli-expansion coefficient lists (code spaces).
std::string code_space_to_json(const CodeSpace& code);
std::string stabilizer_code_to_json(const StabilizerCode& code);

}  // namespace ddlab

#endif  // DDLAB_ENCODINGS_HPP_
