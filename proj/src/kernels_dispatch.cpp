// Copyright 2026 The ddlab Authors
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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ddlab/kernels.hpp"

namespace ddlab::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* select_initial() {
  if (const char* env = std::getenv("DDLAB_KERNELS")) {
    std::string s(env);
    if (s == "scalar") return &scalar_ops();
    if (s == "avx2") {
      if (avx2_ops() && cpu_has_avx2_fma()) return avx2_ops();
      throw std::runtime_error("DDLAB_KERNELS=avx2 but CPU lacks AVX2/FMA");
    }
    // anything else, including "auto": fall through
  }
  if (avx2_ops() && cpu_has_avx2_fma()) return avx2_ops();
  return &scalar_ops();
}

const Ops*& active_slot() {
  static const Ops* slot = select_initial();
  return slot;
}

}  // namespace

const Ops& active() { return *active_slot(); }

void force_backend(Backend b) {
  switch (b) {
    case Backend::kScalar:
      active_slot() = &scalar_ops();
      return;
    case Backend::kAvx2:
      if (!avx2_ops() || !cpu_has_avx2_fma())
        throw std::runtime_error("AVX2 backend unavailable on this CPU");
      active_slot() = avx2_ops();
      return;
    case Backend::kAuto:
      active_slot() = (avx2_ops() && cpu_has_avx2_fma()) ? avx2_ops() : &scalar_ops();
      return;
  }
}

}  // namespace ddlab::kernels
