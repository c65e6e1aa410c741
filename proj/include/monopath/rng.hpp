// Copyright 2026 The Monopath Authors
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

#ifndef MONOPATH_RNG_HPP
#define MONOPATH_RNG_HPP

#include <bit>
#include <cstdint>

namespace monopath {

// 64-bit finalizer (Stafford's "mix13" variant of the SplitMix64 mixer).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/**
 * Splittable counter-based PRNG stream in the style of SplittableRandom
 * (Steele, Lea & Flood).  A stream is addressed by (master_seed,
 * stream_index); equal addresses give bit-identical sequences, distinct
 * stream indices give distinct odd increments ("gammas") and therefore
 * statistically independent sequences.  One stream per Monte Carlo trial;
 * streams are single-owner and never shared between threads.
 */
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept {
    // Equivalent to taking the stream_index-th split of the root generator:
    // the root's 2k-th and (2k+1)-th outputs seed child state and gamma.
    const std::uint64_t base = master_seed + (2 * stream_index + 1) * kGoldenGamma;
    state_ = mix64(base);
    gamma_ = mix_gamma(base + kGoldenGamma);
  }

  std::uint64_t next_u64() noexcept { return mix64(state_ += gamma_); }

  /// Uniform double in the half-open interval (0, 1]; never returns 0, so
  /// -log(u) is always finite.
  double uniform() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

  // MurmurHash3-style mix, forced odd with enough bit transitions to make a
  // good gamma (the popcount fixup from the SplittableRandom paper).
  static constexpr std::uint64_t mix_gamma(std::uint64_t z) noexcept {
    z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
    z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
    z = (z ^ (z >> 33)) | 1ULL;
    return (std::popcount(z ^ (z >> 1)) < 24) ? z ^ 0xAAAAAAAAAAAAAAAAULL : z;
  }

  std::uint64_t state_;
  std::uint64_t gamma_;
};

}  // namespace monopath

#endif  // MONOPATH_RNG_HPP
