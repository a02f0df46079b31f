// Copyright 2026 The qmip Authors
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

#ifndef QMIP_STATEVECTOR_HPP
#define QMIP_STATEVECTOR_HPP

#include <complex>
#include <vector>

#include "qmip/pauli.hpp"

namespace qmip {

inline constexpr uint32_t kMaxStateQubits = 21;

/// Pure state on `num_qubits` qubits, qubit 1 = most significant index bit.
class StateVector {
 public:
  explicit StateVector(uint32_t num_qubits);
  StateVector(uint32_t num_qubits, std::vector<std::complex<double>> amplitudes);

  /// Computational basis state |index>.
  static StateVector basis_state(uint32_t num_qubits, uint64_t index);

  uint32_t num_qubits() const { return num_qubits_; }
  uint64_t dim() const { return uint64_t{1} << num_qubits_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::vector<std::complex<double>>& amplitudes() { return amps_; }
  std::complex<double>& operator[](uint64_t i) { return amps_[i]; }
  const std::complex<double>& operator[](uint64_t i) const { return amps_[i]; }

  double norm_squared() const;
  void normalize();
  /// Multiplies by a phase making the largest-magnitude amplitude real
  /// positive (deterministic representative of the ray).
  void fix_global_phase();

  CVector to_eigen() const;
  static StateVector from_eigen(uint32_t num_qubits, const CVector& v);

 private:
  uint32_t num_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Expands a word on `targets` (1-based, distinct) to full-width masks.
PauliWord expand_word(const PauliWord& word, const std::vector<int>& targets,
                      uint32_t num_qubits);

/// Applies sign * X(x) * Z(z) on the listed qubits. The word is a permutation
/// with signs, so this is exact and unitary.
StateVector apply_pauli(const StateVector& state, const PauliWord& word,
                        const std::vector<int>& targets);
StateVector apply_pauli(const StateVector& state, const PauliWord& full_width_word);

/// <state| word |state> for a full-width word.
std::complex<double> pauli_expectation(const StateVector& state, const PauliWord& word);

/// Applies a dense operator on a qubit subset (targets give its tensor order).
StateVector apply_dense(const StateVector& state, const CMatrix& op,
                        const std::vector<int>& targets);

std::complex<double> inner_product(const StateVector& a, const StateVector& b);

/// Reduced density matrix of the listed qubits (in the listed order).
CMatrix reduced_density(const StateVector& state, const std::vector<int>& keep);

/// state (x) |extra_basis_index> on `extra` appended lower-significance qubits.
StateVector append_qubits(const StateVector& state, uint32_t extra, uint64_t basis_index);

}  // namespace qmip

#endif
