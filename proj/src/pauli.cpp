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

#include "qmip/pauli.hpp"

#include <bit>

#include "qmip/errors.hpp"

namespace qmip {

PauliWord::PauliWord(int sign, BitString x_mask, BitString z_mask)
    : sign_(sign), x_(std::move(x_mask)), z_(std::move(z_mask)) {
  if (sign_ != 1 && sign_ != -1) throw InvariantError("pauli sign must be +1 or -1");
  if (x_.size() != z_.size()) throw InvariantError("pauli mask length mismatch");
}

PauliWord PauliWord::parse(const std::string& text) {
  if (text.empty()) throw ConfigError("empty pauli word");
  size_t start = 0;
  int sign = +1;
  if (text[0] == '-') {
    sign = -1;
    start = 1;
  }
  if (start == text.size()) throw ConfigError("pauli word has no letters");
  uint32_t n = static_cast<uint32_t>(text.size() - start);
  BitString x = BitString::zeros(n);
  BitString z = BitString::zeros(n);
  for (uint32_t j = 0; j < n; ++j) {
    switch (text[start + j]) {
      case 'I':
        break;
      case 'X':
        x = x.with_bit(j + 1, 1);
        break;
      case 'Z':
        z = z.with_bit(j + 1, 1);
        break;
      case 'W':
        x = x.with_bit(j + 1, 1);
        z = z.with_bit(j + 1, 1);
        break;
      default:
        throw ConfigError("pauli word may contain only I, X, Z, W");
    }
  }
  return PauliWord(sign, x, z);
}

PauliWord PauliWord::operator*(const PauliWord& other) const {
  int sign = sign_ * other.sign_ * (z_.dot(other.x_) ? -1 : +1);
  return PauliWord(sign, x_ ^ other.x_, z_ ^ other.z_);
}

int PauliWord::commute_sign(const PauliWord& other) const {
  return ((x_.dot(other.z_) + z_.dot(other.x_)) & 1) ? -1 : +1;
}

std::string PauliWord::str() const {
  std::string out;
  if (sign_ < 0) out.push_back('-');
  for (uint32_t j = 1; j <= size(); ++j) {
    int xb = x_.bit(j), zb = z_.bit(j);
    out.push_back(xb ? (zb ? 'W' : 'X') : (zb ? 'Z' : 'I'));
  }
  return out;
}

CMatrix PauliWord::to_matrix(uint32_t max_qubits) const {
  if (size() > max_qubits) throw BudgetError("pauli word too wide for dense realization");
  const uint64_t dim = 1ull << size();
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const uint64_t x = x_.mask(), z = z_.mask();
  for (uint64_t col = 0; col < dim; ++col) {
    // X(x) Z(z) |col> = (-1)^{<col, z>} |col ^ x>.
    double phase = (std::popcount(col & z) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) = sign_ * phase;
  }
  return m;
}

}  // namespace qmip
