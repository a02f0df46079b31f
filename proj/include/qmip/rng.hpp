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

#ifndef QMIP_RNG_HPP
#define QMIP_RNG_HPP

#include <cstdint>

namespace qmip {

/// Counter-seeded splitmix64 stream.
///
/// Each (master seed, stream index) pair yields an independent deterministic
/// stream, so Monte Carlo samples can be assigned fixed streams regardless of
/// how work is split across threads.
class RngStream {
 public:
  RngStream(uint64_t master_seed, uint64_t stream_index)
      : state_(mix(mix(master_seed ^ 0x9e3779b97f4a7c15ull) ^ stream_index)) {}

  explicit RngStream(uint64_t seed) : RngStream(seed, 0) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be nonzero.
  uint64_t next_below(uint64_t bound) {
    // Rejection-free modulo is fine here: bound is tiny compared to 2^64.
    return next_u64() % bound;
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Bernoulli(p) draw.
  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace qmip

#endif
