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

#include "qmip/bitstring.hpp"

#include <bit>

#include "qmip/errors.hpp"

namespace qmip {

BitString::BitString(uint32_t n, uint64_t mask) : n_(n), mask_(mask) {
  if (n == 0 || n > 63) throw ConfigError("bit string length must be in 1..63");
  if (n < 64 && (mask >> n) != 0) throw InvariantError("bit string mask exceeds length");
}

BitString BitString::parse(const std::string& text) {
  if (text.empty()) throw ConfigError("empty bit string");
  uint64_t mask = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw ConfigError("bit string may contain only 0 and 1");
    mask = (mask << 1) | static_cast<uint64_t>(c - '0');
  }
  return BitString(static_cast<uint32_t>(text.size()), mask);
}

int BitString::bit(uint32_t position) const {
  if (position < 1 || position > n_) throw InvariantError("bit position out of range");
  return static_cast<int>((mask_ >> (n_ - position)) & 1);
}

BitString BitString::with_bit(uint32_t position, int value) const {
  if (position < 1 || position > n_) throw InvariantError("bit position out of range");
  uint64_t bit = 1ull << (n_ - position);
  return BitString(n_, value ? (mask_ | bit) : (mask_ & ~bit));
}

void BitString::check_same_length(const BitString& other) const {
  if (n_ != other.n_) throw InvariantError("bit string length mismatch");
}

BitString BitString::operator^(const BitString& other) const {
  check_same_length(other);
  return BitString(n_, mask_ ^ other.mask_);
}

BitString BitString::operator&(const BitString& other) const {
  check_same_length(other);
  return BitString(n_, mask_ & other.mask_);
}

int BitString::dot(const BitString& other) const {
  check_same_length(other);
  return std::popcount(mask_ & other.mask_) & 1;
}

int BitString::weight() const { return std::popcount(mask_); }

std::string BitString::str() const {
  std::string out(n_, '0');
  for (uint32_t j = 0; j < n_; ++j) {
    if ((mask_ >> (n_ - 1 - j)) & 1) out[j] = '1';
  }
  return out;
}

bool BitString::operator<(const BitString& o) const {
  check_same_length(o);
  return mask_ < o.mask_;
}

}  // namespace qmip
