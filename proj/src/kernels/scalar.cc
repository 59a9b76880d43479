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

#include <bit>

#include "ice/kernels/bitset_kernels.h"

namespace ice::kernels::scalar {

std::size_t count_andnot(const uint64_t* a, const uint64_t* exclude,
                         std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & ~exclude[i]));
  }
  return total;
}

std::size_t count_and_andnot(const uint64_t* a, const uint64_t* mask,
                             const uint64_t* exclude, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & mask[i] & ~exclude[i]));
  }
  return total;
}

void or_into(uint64_t* dst, const uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

}  // namespace ice::kernels::scalar
