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

#include <atomic>
#include <cstdlib>
#include <string>

#include "backends.hpp"
#include "qmip/errors.hpp"

namespace qmip::kernels {
namespace {

bool avx2_usable() {
#if defined(__x86_64__) || defined(_M_X64)
  return avx2_ops() != nullptr && __builtin_cpu_supports("avx2") &&
         __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() {
  Backend widest = avx2_usable() ? Backend::kAvx2 : Backend::kScalar;
  const char* env = std::getenv("QMIP_SIMD");
  if (env == nullptr) return widest;
  std::string s(env);
  if (s == "auto" || s.empty()) return widest;
  if (s == "scalar") return Backend::kScalar;
  if (s == "avx2") {
    if (!avx2_usable()) throw ConfigError("QMIP_SIMD=avx2 but AVX2 is unavailable");
    return Backend::kAvx2;
  }
  throw ConfigError("QMIP_SIMD must be one of: auto, scalar, avx2");
}

std::atomic<Backend>& active_slot() {
  static std::atomic<Backend> slot{initial_backend()};
  return slot;
}

}  // namespace

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::kScalar};
  if (avx2_usable()) out.push_back(Backend::kAvx2);
  return out;
}

Backend active_backend() { return active_slot().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (backend == Backend::kAvx2 && !avx2_usable())
    throw ConfigError("AVX2 backend is unavailable on this machine");
  active_slot().store(backend, std::memory_order_relaxed);
}

std::string backend_name(Backend backend) {
  return backend == Backend::kAvx2 ? "avx2" : "scalar";
}

const Ops& ops_for(Backend backend) {
  if (backend == Backend::kAvx2) {
    const Ops* o = avx2_ops();
    if (o != nullptr) return *o;
  }
  return scalar_ops();
}

const Ops& ops() { return ops_for(active_backend()); }

}  // namespace qmip::kernels
