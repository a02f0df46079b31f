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

#include "qmip/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qmip/errors.hpp"
#include "qmip/kernels.hpp"

namespace qmip {

StateVector::StateVector(uint32_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxStateQubits)
    throw BudgetError("state vector qubit count out of range");
  amps_.assign(dim(), 0.0);
}

StateVector::StateVector(uint32_t num_qubits, std::vector<std::complex<double>> amplitudes)
    : StateVector(num_qubits) {
  if (amplitudes.size() != dim()) throw InvariantError("amplitude count mismatch");
  amps_ = std::move(amplitudes);
}

StateVector StateVector::basis_state(uint32_t num_qubits, uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dim()) throw InvariantError("basis index out of range");
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  return kernels::ops().norm_squared(amps_.data(), amps_.size());
}

void StateVector::normalize() {
  double n2 = norm_squared();
  if (n2 <= 0) throw InvariantError("cannot normalize zero vector");
  kernels::ops().scale(amps_.data(), amps_.size(), 1.0 / std::sqrt(n2));
}

void StateVector::fix_global_phase() {
  uint64_t best = 0;
  double best_mag = -1;
  for (uint64_t j = 0; j < amps_.size(); ++j) {
    double m = std::norm(amps_[j]);
    if (m > best_mag + 1e-15) {
      best_mag = m;
      best = j;
    }
  }
  if (best_mag <= 0) return;
  std::complex<double> phase = amps_[best] / std::abs(amps_[best]);
  for (auto& a : amps_) a /= phase;
}

CVector StateVector::to_eigen() const {
  CVector v(static_cast<Eigen::Index>(dim()));
  for (uint64_t j = 0; j < dim(); ++j) v(static_cast<Eigen::Index>(j)) = amps_[j];
  return v;
}

StateVector StateVector::from_eigen(uint32_t num_qubits, const CVector& v) {
  StateVector s(num_qubits);
  if (static_cast<uint64_t>(v.size()) != s.dim())
    throw InvariantError("eigen vector dimension mismatch");
  for (uint64_t j = 0; j < s.dim(); ++j) s.amps_[j] = v(static_cast<Eigen::Index>(j));
  return s;
}

namespace {

void check_targets(const std::vector<int>& targets, uint32_t num_qubits) {
  std::set<int> seen;
  for (int t : targets) {
    if (t < 1 || static_cast<uint32_t>(t) > num_qubits)
      throw InvariantError("target qubit out of range");
    if (!seen.insert(t).second) throw InvariantError("duplicate target qubit");
  }
}

}  // namespace

PauliWord expand_word(const PauliWord& word, const std::vector<int>& targets,
                      uint32_t num_qubits) {
  if (word.size() != targets.size()) throw InvariantError("word arity mismatch");
  check_targets(targets, num_qubits);
  BitString x = BitString::zeros(num_qubits);
  BitString z = BitString::zeros(num_qubits);
  for (size_t k = 0; k < targets.size(); ++k) {
    uint32_t pos = static_cast<uint32_t>(k + 1);
    if (word.x_mask().bit(pos)) x = x.with_bit(targets[k], 1);
    if (word.z_mask().bit(pos)) z = z.with_bit(targets[k], 1);
  }
  return PauliWord(word.sign(), x, z);
}

StateVector apply_pauli(const StateVector& state, const PauliWord& full_width_word) {
  if (full_width_word.size() != state.num_qubits())
    throw InvariantError("pauli width mismatch");
  StateVector out(state.num_qubits());
  kernels::ops().apply_pauli(out.amplitudes().data(), state.amplitudes().data(), state.dim(),
                             full_width_word.x_mask().mask(), full_width_word.z_mask().mask(),
                             full_width_word.sign() < 0);
  return out;
}

StateVector apply_pauli(const StateVector& state, const PauliWord& word,
                        const std::vector<int>& targets) {
  return apply_pauli(state, expand_word(word, targets, state.num_qubits()));
}

std::complex<double> pauli_expectation(const StateVector& state, const PauliWord& word) {
  if (word.size() != state.num_qubits()) throw InvariantError("pauli width mismatch");
  return kernels::ops().pauli_expectation(state.amplitudes().data(), state.dim(),
                                          word.x_mask().mask(), word.z_mask().mask(),
                                          word.sign() < 0);
}

StateVector apply_dense(const StateVector& state, const CMatrix& op,
                        const std::vector<int>& targets) {
  check_targets(targets, state.num_qubits());
  const size_t k = targets.size();
  const uint64_t sub_dim = uint64_t{1} << k;
  if (op.rows() != static_cast<Eigen::Index>(sub_dim) || op.cols() != op.rows())
    throw InvariantError("dense operator dimension mismatch");
  // Bit of global index corresponding to the m-th target (tensor order).
  std::vector<uint64_t> bits(k);
  uint64_t target_mask = 0;
  for (size_t m = 0; m < k; ++m) {
    bits[m] = uint64_t{1} << (state.num_qubits() - targets[m]);
    target_mask |= bits[m];
  }
  StateVector out(state.num_qubits());
  std::vector<std::complex<double>> in_block(sub_dim), out_block(sub_dim);
  const uint64_t dim = state.dim();
  for (uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;  // enumerate free-bit patterns only
    for (uint64_t s = 0; s < sub_dim; ++s) {
      uint64_t idx = base;
      for (size_t m = 0; m < k; ++m)
        if ((s >> (k - 1 - m)) & 1) idx |= bits[m];
      in_block[s] = state[idx];
    }
    for (uint64_t rr = 0; rr < sub_dim; ++rr) {
      std::complex<double> acc = 0;
      for (uint64_t cc = 0; cc < sub_dim; ++cc)
        acc += op(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc)) * in_block[cc];
      out_block[rr] = acc;
    }
    for (uint64_t s = 0; s < sub_dim; ++s) {
      uint64_t idx = base;
      for (size_t m = 0; m < k; ++m)
        if ((s >> (k - 1 - m)) & 1) idx |= bits[m];
      out[idx] = out_block[s];
    }
  }
  return out;
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw InvariantError("state dimension mismatch");
  return kernels::ops().inner_product(a.amplitudes().data(), b.amplitudes().data(), a.dim());
}

CMatrix reduced_density(const StateVector& state, const std::vector<int>& keep) {
  check_targets(keep, state.num_qubits());
  const size_t k = keep.size();
  const uint64_t sub_dim = uint64_t{1} << k;
  std::vector<uint64_t> bits(k);
  uint64_t keep_mask = 0;
  for (size_t m = 0; m < k; ++m) {
    bits[m] = uint64_t{1} << (state.num_qubits() - keep[m]);
    keep_mask |= bits[m];
  }
  CMatrix rho = CMatrix::Zero(static_cast<Eigen::Index>(sub_dim),
                              static_cast<Eigen::Index>(sub_dim));
  std::vector<std::complex<double>> block(sub_dim);
  const uint64_t dim = state.dim();
  for (uint64_t base = 0; base < dim; ++base) {
    if (base & keep_mask) continue;
    for (uint64_t s = 0; s < sub_dim; ++s) {
      uint64_t idx = base;
      for (size_t m = 0; m < k; ++m)
        if ((s >> (k - 1 - m)) & 1) idx |= bits[m];
      block[s] = state[idx];
    }
    for (uint64_t rr = 0; rr < sub_dim; ++rr)
      for (uint64_t cc = 0; cc < sub_dim; ++cc)
        rho(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc)) +=
            block[rr] * std::conj(block[cc]);
  }
  return rho;
}

StateVector append_qubits(const StateVector& state, uint32_t extra, uint64_t basis_index) {
  if (extra == 0) return state;
  uint32_t total = state.num_qubits() + extra;
  if (total > kMaxStateQubits) throw BudgetError("appended state exceeds qubit budget");
  uint64_t block = uint64_t{1} << extra;
  if (basis_index >= block) throw InvariantError("ancilla basis index out of range");
  StateVector out(total);
  for (uint64_t j = 0; j < state.dim(); ++j) out[j * block + basis_index] = state[j];
  return out;
}

}  // namespace qmip
