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

// AVX2 kernel variants. A 256-bit vector holds two complex doubles. The Pauli
// kernels rely on two identities:
//   (-1)^{popcount((j^x)&z)} = (-1)^{popcount(x&z)} (-1)^{popcount(j&z)}
//   j ^ x maps a two-complex block to another two-complex block, swapped
//   within the block when x has its lowest bit set.

#include "backends.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <bit>

namespace qmip::kernels {
namespace {

inline __m256d hi_flip_mask() { return _mm256_set_pd(-0.0, -0.0, 0.0, 0.0); }
inline __m256d all_flip_mask() { return _mm256_set1_pd(-0.0); }

// Loads the two source complexes that map onto block b under index xor x.
inline __m256d load_partner(const double* src, uint64_t b, uint64_t x) {
  uint64_t base = (2 * b) ^ (x & ~1ull);
  __m256d v = _mm256_loadu_pd(src + 2 * base);
  if (x & 1) v = _mm256_permute2f128_pd(v, v, 0x01);
  return v;
}

void apply_pauli_avx2(cd* dst, const cd* src, uint64_t size, uint64_t x, uint64_t z,
                      bool negate) {
  if (size < 2) {
    scalar_ops().apply_pauli(dst, src, size, x, z, negate);
    return;
  }
  bool base_neg = ((std::popcount(x & z) & 1) != 0) != negate;
  __m256d mask_pos = (z & 1) ? hi_flip_mask() : _mm256_setzero_pd();
  __m256d mask_neg = _mm256_xor_pd(mask_pos, all_flip_mask());
  if (base_neg) std::swap(mask_pos, mask_neg);
  const double* s = reinterpret_cast<const double*>(src);
  double* d = reinterpret_cast<double*>(dst);
  const uint64_t zh = z >> 1;
  const uint64_t blocks = size / 2;
  for (uint64_t b = 0; b < blocks; ++b) {
    __m256d v = load_partner(s, b, x);
    __m256d m = (std::popcount(b & zh) & 1) ? mask_neg : mask_pos;
    _mm256_storeu_pd(d + 4 * b, _mm256_xor_pd(v, m));
  }
}

cd pauli_expectation_avx2(const cd* src, uint64_t size, uint64_t x, uint64_t z,
                          bool negate) {
  if (size < 2) return scalar_ops().pauli_expectation(src, size, x, z, negate);
  bool base_neg = ((std::popcount(x & z) & 1) != 0) != negate;
  __m256d mask_pos = (z & 1) ? hi_flip_mask() : _mm256_setzero_pd();
  __m256d mask_neg = _mm256_xor_pd(mask_pos, all_flip_mask());
  if (base_neg) std::swap(mask_pos, mask_neg);
  const __m256d odd_flip = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  const double* s = reinterpret_cast<const double*>(src);
  const uint64_t zh = z >> 1;
  const uint64_t blocks = size / 2;
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  for (uint64_t b = 0; b < blocks; ++b) {
    __m256d a = _mm256_loadu_pd(s + 4 * b);
    __m256d c = load_partner(s, b, x);
    __m256d m = (std::popcount(b & zh) & 1) ? mask_neg : mask_pos;
    c = _mm256_xor_pd(c, m);
    // conj(a) * c: re = ar*cr + ai*ci, im = ar*ci - ai*cr.
    acc_re = _mm256_fmadd_pd(a, c, acc_re);
    __m256d c_swap = _mm256_xor_pd(_mm256_permute_pd(c, 0b0101), odd_flip);
    acc_im = _mm256_fmadd_pd(a, c_swap, acc_im);
  }
  alignas(32) double re4[4], im4[4];
  _mm256_store_pd(re4, acc_re);
  _mm256_store_pd(im4, acc_im);
  return {re4[0] + re4[1] + re4[2] + re4[3], im4[0] + im4[1] + im4[2] + im4[3]};
}

double norm_squared_avx2(const cd* src, uint64_t size) {
  if (size < 2) return scalar_ops().norm_squared(src, size);
  const double* s = reinterpret_cast<const double*>(src);
  __m256d acc = _mm256_setzero_pd();
  for (uint64_t b = 0; b < size / 2; ++b) {
    __m256d a = _mm256_loadu_pd(s + 4 * b);
    acc = _mm256_fmadd_pd(a, a, acc);
  }
  alignas(32) double v[4];
  _mm256_store_pd(v, acc);
  return v[0] + v[1] + v[2] + v[3];
}

cd inner_product_avx2(const cd* a, const cd* b, uint64_t size) {
  if (size < 2) return scalar_ops().inner_product(a, b, size);
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  const __m256d odd_flip = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  for (uint64_t k = 0; k < size / 2; ++k) {
    __m256d va = _mm256_loadu_pd(pa + 4 * k);
    __m256d vb = _mm256_loadu_pd(pb + 4 * k);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    __m256d vb_swap = _mm256_xor_pd(_mm256_permute_pd(vb, 0b0101), odd_flip);
    acc_im = _mm256_fmadd_pd(va, vb_swap, acc_im);
  }
  alignas(32) double re4[4], im4[4];
  _mm256_store_pd(re4, acc_re);
  _mm256_store_pd(im4, acc_im);
  return {re4[0] + re4[1] + re4[2] + re4[3], im4[0] + im4[1] + im4[2] + im4[3]};
}

void scale_avx2(cd* dst, uint64_t size, double factor) {
  if (size < 2) {
    scalar_ops().scale(dst, size, factor);
    return;
  }
  double* d = reinterpret_cast<double*>(dst);
  __m256d f = _mm256_set1_pd(factor);
  for (uint64_t b = 0; b < size / 2; ++b) {
    _mm256_storeu_pd(d + 4 * b, _mm256_mul_pd(_mm256_loadu_pd(d + 4 * b), f));
  }
}

}  // namespace

const Ops* avx2_ops() {
  static const Ops ops{apply_pauli_avx2, pauli_expectation_avx2, norm_squared_avx2,
                       inner_product_avx2, scale_avx2};
  return &ops;
}

}  // namespace qmip::kernels

#else

namespace qmip::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace qmip::kernels

#endif
