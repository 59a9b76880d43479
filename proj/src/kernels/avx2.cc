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

// Compiled with -mavx2 on x86-64; never called unless the CPU reports AVX2.

#include "ice/kernels/bitset_kernels.h"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace ice::kernels::avx2 {

#if defined(__AVX2__)
namespace {

// Nibble-table popcount (Mula): per-byte counts, summed into 64-bit lanes.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                        _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

}  // namespace

std::size_t count_andnot(const uint64_t* a, const uint64_t* exclude,
                         std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    // andnot(x, y) computes ~x & y.
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_andnot_si256(load(exclude + i), load(a + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) {
    total += static_cast<std::size_t>(__builtin_popcountll(a[i] & ~exclude[i]));
  }
  return total;
}

std::size_t count_and_andnot(const uint64_t* a, const uint64_t* mask,
                             const uint64_t* exclude, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i am = _mm256_and_si256(load(a + i), load(mask + i));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_andnot_si256(load(exclude + i), am)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) {
    total += static_cast<std::size_t>(__builtin_popcountll(a[i] & mask[i] & ~exclude[i]));
  }
  return total;
}

void or_into(uint64_t* dst, const uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

#else  // !__AVX2__

std::size_t count_andnot(const uint64_t* a, const uint64_t* exclude,
                         std::size_t words) {
  return scalar::count_andnot(a, exclude, words);
}
std::size_t count_and_andnot(const uint64_t* a, const uint64_t* mask,
                             const uint64_t* exclude, std::size_t words) {
  return scalar::count_and_andnot(a, mask, exclude, words);
}
void or_into(uint64_t* dst, const uint64_t* src, std::size_t words) {
  scalar::or_into(dst, src, words);
}

#endif

}  // namespace ice::kernels::avx2
