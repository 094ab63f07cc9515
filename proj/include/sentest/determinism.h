// Copyright 2026 The Sentest Authors
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

#ifndef SENTEST_DETERMINISM_H_
#define SENTEST_DETERMINISM_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

namespace sentest {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

// The SplitMix64 output finalizer (a bijection on 64-bit words).
constexpr std::uint64_t SplitMixMix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// A SplitMix64 generator. Value type: copying a stream forks it.
struct RngStream {
  std::uint64_t state = 0;

  // Advances the state and returns the next output.
  std::uint64_t Next() {
    state += kSplitMixGamma;
    return SplitMixMix(state);
  }

  // Uniform-ish integer in [0, n) by modulo reduction. The bias is at most
  // n / 2^64 and is accepted. Throws InvalidArgumentError when n == 0.
  std::uint64_t Bounded(std::uint64_t n);

  friend bool operator==(const RngStream&, const RngStream&) = default;
};

// Pure form of RngStream::Next.
constexpr std::pair<std::uint64_t, RngStream> SplitMixNext(RngStream stream) {
  stream.state += kSplitMixGamma;
  return {SplitMixMix(stream.state), stream};
}

std::pair<std::uint64_t, RngStream> Bounded(RngStream stream, std::uint64_t n);

// Stream for one sample: state = mix(global_seed ^ (sample_index + 1)).
// Depends only on its arguments, so processing order never matters.
constexpr RngStream DeriveStream(std::uint64_t global_seed,
                                 std::uint64_t sample_index) {
  return RngStream{SplitMixMix(global_seed ^ (sample_index + 1))};
}

constexpr std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t hash = kFnvOffsetBasis;
  for (char c : bytes) {
    hash ^= static_cast<std::uint8_t>(c);
    hash *= kFnvPrime;
  }
  return hash;
}

}  // namespace sentest

#endif  // SENTEST_DETERMINISM_H_
