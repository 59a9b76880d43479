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

#ifndef ICE_KERNELS_BITSET_KERNELS_H_
#define ICE_KERNELS_BITSET_KERNELS_H_

// Word-parallel coverage kernels. Every coverage count in the set cover
// oracles (greedy gains, branch-and-bound bounds) reduces to a popcount over
// masked 64-bit words; these are the only data-parallel inner loops in the
// library. A scalar reference and an AVX2 variant exist for each kernel and
// are selected once at runtime.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ice::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Best ISA supported by this CPU (honours ICE_KERNELS=scalar).
Isa detected_isa();
// ISA currently used by the dispatching entry points below.
Isa active_isa();
// Test hook. Forcing an unsupported ISA throws ice::DomainError.
void force_isa(Isa isa);
bool isa_supported(Isa isa);

// popcount(a & ~exclude)
std::size_t count_andnot(const uint64_t* a, const uint64_t* exclude,
                         std::size_t words);
// popcount(a & mask & ~exclude)
std::size_t count_and_andnot(const uint64_t* a, const uint64_t* mask,
                             const uint64_t* exclude, std::size_t words);
// dst |= src
void or_into(uint64_t* dst, const uint64_t* src, std::size_t words);

namespace scalar {
std::size_t count_andnot(const uint64_t* a, const uint64_t* exclude,
                         std::size_t words);
std::size_t count_and_andnot(const uint64_t* a, const uint64_t* mask,
                             const uint64_t* exclude, std::size_t words);
void or_into(uint64_t* dst, const uint64_t* src, std::size_t words);
}  // namespace scalar

namespace avx2 {
// Callable only when isa_supported(Isa::kAvx2).
std::size_t count_andnot(const uint64_t* a, const uint64_t* exclude,
                         std::size_t words);
std::size_t count_and_andnot(const uint64_t* a, const uint64_t* mask,
                             const uint64_t* exclude, std::size_t words);
void or_into(uint64_t* dst, const uint64_t* src, std::size_t words);
}  // namespace avx2

}  // namespace ice::kernels

#endif  // ICE_KERNELS_BITSET_KERNELS_H_
