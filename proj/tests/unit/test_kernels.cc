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
#include <vector>

#include "doctest.h"
#include "ice/core/bitset.h"
#include "ice/core/errors.h"
#include "ice/core/random.h"
#include "ice/kernels/bitset_kernels.h"

using namespace ice;
namespace k = ice::kernels;

namespace {

std::vector<uint64_t> random_words(Rng& rng, std::size_t n) {
  std::vector<uint64_t> v(n);
  for (auto& w : v) {
    // Mix dense, sparse and empty words.
    switch (rng.below(4)) {
      case 0: w = 0; break;
      case 1: w = ~uint64_t{0}; break;
      case 2: w = rng.next() & rng.next() & rng.next(); break;
      default: w = rng.next();
    }
  }
  return v;
}

std::size_t naive_andnot(const std::vector<uint64_t>& a, const std::vector<uint64_t>& x) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int b = 0; b < 64; ++b) c += ((a[i] >> b) & 1) && !((x[i] >> b) & 1);
  }
  return c;
}

}  // namespace

TEST_CASE("scalar kernels match a bit-by-bit count") {
  Rng rng(3);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u}) {
    const auto a = random_words(rng, n);
    const auto m = random_words(rng, n);
    const auto x = random_words(rng, n);
    CHECK(k::scalar::count_andnot(a.data(), x.data(), n) == naive_andnot(a, x));
    std::vector<uint64_t> am(n);
    for (std::size_t i = 0; i < n; ++i) am[i] = a[i] & m[i];
    CHECK(k::scalar::count_and_andnot(a.data(), m.data(), x.data(), n) == naive_andnot(am, x));
    auto dst = a;
    k::scalar::or_into(dst.data(), x.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(dst[i] == (a[i] | x[i]));
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!k::isa_supported(k::Isa::kAvx2)) {
    MESSAGE("AVX2 not available on this machine; skipped");
    return;
  }
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.below(70);
    const auto a = random_words(rng, n);
    const auto m = random_words(rng, n);
    const auto x = random_words(rng, n);
    CHECK(k::avx2::count_andnot(a.data(), x.data(), n) ==
          k::scalar::count_andnot(a.data(), x.data(), n));
    CHECK(k::avx2::count_and_andnot(a.data(), m.data(), x.data(), n) ==
          k::scalar::count_and_andnot(a.data(), m.data(), x.data(), n));
    auto d1 = a;
    auto d2 = a;
    k::avx2::or_into(d1.data(), x.data(), n);
    k::scalar::or_into(d2.data(), x.data(), n);
    CHECK(d1 == d2);
  }
}

TEST_CASE("dispatch can be forced and restored") {
  const k::Isa before = k::active_isa();
  k::force_isa(k::Isa::kScalar);
  CHECK(k::active_isa() == k::Isa::kScalar);
  Bitset a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  CHECK(a.count_andnot(b) == 2);
  if (k::isa_supported(k::Isa::kAvx2)) {
    k::force_isa(k::Isa::kAvx2);
    CHECK(a.count_andnot(b) == 2);
  } else {
    CHECK_THROWS_AS(k::force_isa(k::Isa::kAvx2), DomainError);
  }
  k::force_isa(before);
  CHECK(k::isa_name(k::Isa::kScalar) == "scalar");
}

TEST_CASE("bitset basics") {
  Bitset s(70);
  CHECK(s.none());
  s.set(3);
  s.set(69);
  CHECK(s.test(69));
  CHECK(s.count() == 2);
  s.reset(3);
  CHECK_FALSE(s.test(3));
  Bitset t(70);
  t.set(5);
  t |= s;
  CHECK(t.count() == 2);
  t.and_not(s);
  CHECK(t.count() == 1);
}
