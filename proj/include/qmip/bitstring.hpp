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

#ifndef QMIP_BITSTRING_HPP
#define QMIP_BITSTRING_HPP

#include <cstdint>
#include <string>

namespace qmip {

/// Fixed-length vector over F2.
///
/// Position 1 is the leftmost character of the ASCII form and the most
/// significant bit of the packed mask, so the mask value equals the string
/// read as a binary integer. This makes lexicographic order on strings equal
/// to numeric order on masks, and makes the mask directly usable as a basis
/// state index (qubit 1 = most significant tensor factor).
class BitString {
 public:
  BitString() : n_(0), mask_(0) {}
  BitString(uint32_t n, uint64_t mask);

  /// Parses a string of '0'/'1' characters.
  static BitString parse(const std::string& text);
  static BitString zeros(uint32_t n) { return BitString(n, 0); }

  uint32_t size() const { return n_; }
  uint64_t mask() const { return mask_; }

  /// Bit at 1-based position (position 1 = leftmost).
  int bit(uint32_t position) const;

  BitString with_bit(uint32_t position, int value) const;

  BitString operator^(const BitString& other) const;
  BitString operator&(const BitString& other) const;

  /// Inner product mod 2.
  int dot(const BitString& other) const;

  int weight() const;
  bool is_zero() const { return mask_ == 0; }

  std::string str() const;

  bool operator==(const BitString& o) const { return n_ == o.n_ && mask_ == o.mask_; }
  bool operator!=(const BitString& o) const { return !(*this == o); }
  /// Lexicographic comparison; only defined for equal lengths.
  bool operator<(const BitString& o) const;

 private:
  void check_same_length(const BitString& other) const;

  uint32_t n_;
  uint64_t mask_;
};

}  // namespace qmip

#endif
