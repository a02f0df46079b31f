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

#ifndef QMIP_PAULI_HPP
#define QMIP_PAULI_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "qmip/bitstring.hpp"

namespace qmip {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Signed Pauli word sign * X(x) * Z(z), with X factors to the left of Z
/// factors. No Y letter: a position present in both masks is the product XZ.
/// Words are closed under multiplication with sign in {+1, -1} because X and Z
/// masks only ever reorder past each other.
class PauliWord {
 public:
  PauliWord(int sign, BitString x_mask, BitString z_mask);

  static PauliWord identity(uint32_t n) {
    return PauliWord(+1, BitString::zeros(n), BitString::zeros(n));
  }
  static PauliWord x_word(const BitString& x) {
    return PauliWord(+1, x, BitString::zeros(x.size()));
  }
  static PauliWord z_word(const BitString& z) {
    return PauliWord(+1, BitString::zeros(z.size()), z);
  }

  /// Parses an optional leading '-' followed by letters I, X, Z, W
  /// (W marks a position present in both masks).
  static PauliWord parse(const std::string& text);

  int sign() const { return sign_; }
  const BitString& x_mask() const { return x_; }
  const BitString& z_mask() const { return z_; }
  uint32_t size() const { return x_.size(); }

  PauliWord negated() const { return PauliWord(-sign_, x_, z_); }
  bool is_identity_word() const { return x_.is_zero() && z_.is_zero(); }

  /// Group product: (this) * (other). Sign picks up (-1)^{<this.z, other.x>}
  /// from commuting other's X block through this word's Z block.
  PauliWord operator*(const PauliWord& other) const;

  /// +1 if the words commute, -1 if they anticommute.
  int commute_sign(const PauliWord& other) const;

  /// True iff the word is Hermitian (even overlap of the two masks).
  bool hermitian() const { return ((x_ & z_).weight() & 1) == 0; }

  std::string str() const;

  /// Dense matrix on 2^n, qubit 1 = most significant tensor factor.
  /// Guarded by a size budget because the result is exponentially large.
  CMatrix to_matrix(uint32_t max_qubits = 14) const;

  bool operator==(const PauliWord& o) const {
    return sign_ == o.sign_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliWord& o) const { return !(*this == o); }

 private:
  int sign_;
  BitString x_;
  BitString z_;
};

}  // namespace qmip

#endif
