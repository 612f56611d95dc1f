// Copyright 2026 The plaq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "plaq/kernels.hpp"

namespace plaq {
namespace {

const Kernels* autodetect() {
#if defined(PLAQ_BUILD_AVX2)
  if (avx2_available()) return &avx2_kernels();
#endif
  return &scalar_kernels();
}

const Kernels* resolve(const char* name) {
  if (name == nullptr) return autodetect();
  if (std::strcmp(name, "scalar") == 0) return &scalar_kernels();
  if (std::strcmp(name, "avx2") == 0) {
#if defined(PLAQ_BUILD_AVX2)
    if (avx2_available()) return &avx2_kernels();
    throw std::runtime_error("avx2 kernels unavailable on this cpu");
#else
    throw std::runtime_error("avx2 kernels not built");
#endif
  }
  throw std::invalid_argument(std::string("unknown kernel variant: ") + name);
}

const Kernels* initial_choice() {
  const char* env = std::getenv("PLAQ_KERNELS");
  if (env != nullptr && *env != '\0') return resolve(env);
  return autodetect();
}

std::atomic<const Kernels*>& selected() {
  static std::atomic<const Kernels*> table{initial_choice()};
  return table;
}

}  // namespace

bool avx2_available() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Kernels& kernels() {
  return *selected().load(std::memory_order_relaxed);
}

void set_kernels(const char* name) {
  selected().store(resolve(name), std::memory_order_relaxed);
}

}  // namespace plaq
