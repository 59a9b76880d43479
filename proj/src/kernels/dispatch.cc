// Copyright 2026 The ICE Authors
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

#include "ice/core/errors.h"
#include "ice/kernels/bitset_kernels.h"

namespace ice::kernels {
namespace {

struct Table {
  std::size_t (*count_andnot)(const uint64_t*, const uint64_t*, std::size_t);
  std::size_t (*count_and_andnot)(const uint64_t*, const uint64_t*, const uint64_t*,
                                  std::size_t);
  void (*or_into)(uint64_t*, const uint64_t*, std::size_t);
};

constexpr Table kScalar{&scalar::count_andnot, &scalar::count_and_andnot, &scalar::or_into};
constexpr Table kAvx2{&avx2::count_andnot, &avx2::count_and_andnot, &avx2::or_into};

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(__i386__)) && defined(ICE_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa compute_detected() {
  const char* env = std::getenv("ICE_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::kScalar;
  return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<const Table*>& table() {
  static std::atomic<const Table*> t{compute_detected() == Isa::kAvx2 ? &kAvx2 : &kScalar};
  return t;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

Isa detected_isa() {
  static const Isa isa = compute_detected();
  return isa;
}

bool isa_supported(Isa isa) { return isa == Isa::kScalar || cpu_has_avx2(); }

Isa active_isa() {
  return table().load(std::memory_order_relaxed) == &kAvx2 ? Isa::kAvx2 : Isa::kScalar;
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw DomainError("kernel ISA not supported on this CPU: " + std::string(isa_name(isa)));
  }
  table().store(isa == Isa::kAvx2 ? &kAvx2 : &kScalar, std::memory_order_relaxed);
}

std::size_t count_andnot(const uint64_t* a, const uint64_t* exclude, std::size_t words) {
  return table().load(std::memory_order_relaxed)->count_andnot(a, exclude, words);
}

std::size_t count_and_andnot(const uint64_t* a, const uint64_t* mask,
                             const uint64_t* exclude, std::size_t words) {
  return table().load(std::memory_order_relaxed)->count_and_andnot(a, mask, exclude, words);
}

void or_into(uint64_t* dst, const uint64_t* src, std::size_t words) {
  table().load(std::memory_order_relaxed)->or_into(dst, src, words);
}

}  // namespace ice::kernels
