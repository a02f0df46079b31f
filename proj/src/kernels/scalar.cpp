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

// Reference kernels. These are the semantics; the SIMD variants must agree
// with them up to floating-point reduction order.

#include <bit>

#include "qmip/kernels.hpp"

namespace qmip::kernels {
namespace {

void apply_pauli_scalar(cd* dst, const cd* src, uint64_t size, uint64_t x, uint64_t z,
                        bool negate) {
  // (-1)^{popcount((j^x)&z)} = (-1)^{popcount(x&z)} * (-1)^{popcount(j&z)}.
  double base = ((std::popcount(x & z) & 1) != 0) != negate ? -1.0 : 1.0;
  for (uint64_t j = 0; j < size; ++j) {
    double s = (std::popcount(j & z) & 1) ? -base : base;
    dst[j] = s * src[j ^ x];
  }
}

cd pauli_expectation_scalar(const cd* src, uint64_t size, uint64_t x, uint64_t z,
                            bool negate) {
  double base = ((std::popcount(x & z) & 1) != 0) != negate ? -1.0 : 1.0;
  cd acc = 0;
  for (uint64_t j = 0; j < size; ++j) {
    double s = (std::popcount(j & z) & 1) ? -base : base;
    acc += std::conj(src[j]) * (s * src[j ^ x]);
  }
  return acc;
}

double norm_squared_scalar(const cd* src, uint64_t size) {
  double acc = 0;
  for (uint64_t j = 0; j < size; ++j) acc += std::norm(src[j]);
  return acc;
}

cd inner_product_scalar(const cd* a, const cd* b, uint64_t size) {
  cd acc = 0;
  for (uint64_t j = 0; j < size; ++j) acc += std::conj(a[j]) * b[j];
  return acc;
}

void scale_scalar(cd* dst, uint64_t size, double factor) {
  for (uint64_t j = 0; j < size; ++j) dst[j] *= factor;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{apply_pauli_scalar, pauli_expectation_scalar, norm_squared_scalar,
                       inner_product_scalar, scale_scalar};
  return ops;
}

}  // namespace qmip::kernels
