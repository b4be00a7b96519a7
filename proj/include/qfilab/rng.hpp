// Copyright 2026 The qfi-lab Authors
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

#ifndef QFILAB_RNG_HPP
#define QFILAB_RNG_HPP

#include <cstdint>

namespace qfilab {

/// Counter-based generator built on the SplitMix64 finalizer.
///
/// Draw i of stream (seed, stream) is
///   mix(key + (i + 1) * 0x9E3779B97F4A7C15),  key = mix(seed ^ mix(stream + 0xD1B54A32D192ED03))
/// with
///   mix(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///           z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31.
/// Any draw can be computed independently of the others, so splitting a
/// range of draws across workers gives the same values as a serial loop.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + kStreamSalt))) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return mix(key_ + (counter + 1) * kGolden);
  }

  /// Uniform in [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
};

}  // namespace qfilab

#endif  // QFILAB_RNG_HPP
