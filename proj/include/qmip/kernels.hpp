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

#ifndef QMIP_KERNELS_HPP
#define QMIP_KERNELS_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qmip::kernels {

using cd = std::complex<double>;

/// Inner loops over amplitude arrays. `x` and `z` are packed masks over state
/// indices (qubit 1 = most significant bit), `negate` flips the word sign.
///
/// apply_pauli writes dst[j] = s * (-1)^{popcount((j^x) & z)} src[j ^ x]
/// (dst and src must not alias). pauli_expectation returns
/// sum_j conj(src[j]) * (apply_pauli src)[j].
struct Ops {
  void (*apply_pauli)(cd* dst, const cd* src, uint64_t size, uint64_t x, uint64_t z,
                      bool negate);
  cd (*pauli_expectation)(const cd* src, uint64_t size, uint64_t x, uint64_t z, bool negate);
  double (*norm_squared)(const cd* src, uint64_t size);
  cd (*inner_product)(const cd* a, const cd* b, uint64_t size);
  void (*scale)(cd* dst, uint64_t size, double factor);
};

enum class Backend { kScalar, kAvx2 };

/// Backends compiled in and usable on this machine.
std::vector<Backend> available_backends();

/// Active backend. Defaults to the widest available one; the QMIP_SIMD
/// environment variable ("scalar", "avx2", "auto") overrides the default.
Backend active_backend();
void set_backend(Backend backend);

std::string backend_name(Backend backend);

const Ops& ops();
const Ops& ops_for(Backend backend);

}  // namespace qmip::kernels

#endif
