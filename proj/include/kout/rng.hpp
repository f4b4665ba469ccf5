// Copyright 2026 The kout Authors.
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

#ifndef KOUT_RNG_HPP_
#define KOUT_RNG_HPP_

// Platform-stable pseudo-random numbers.
//
// The engine is xoshiro256** (Blackman & Vigna) seeded through splitmix64.
// Every derived quantity (bounded integers, unit doubles, distinct samples)
// is computed here with integer arithmetic only, so the same seed yields the
// same bits on every conforming platform. Nothing reads system entropy.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kout {

struct RngSeed {
  std::uint64_t master = 0;

  friend bool operator==(RngSeed, RngSeed) = default;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of an independent sub-stream `stream` of `seed`.
constexpr RngSeed stream_seed(RngSeed seed, std::uint64_t stream) noexcept {
  return RngSeed{splitmix64(seed.master ^ splitmix64(stream + 0x632be59bd9b4e019ULL))};
}

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(RngSeed seed) noexcept {
    for (std::uint64_t i = 0; i < 4; ++i) {
      state_[i] = splitmix64(seed.master + i * 0x9e3779b97f4a7c15ULL);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Exactly uniform on [0, bound). Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound) noexcept {
    __uint128_t m = static_cast<__uint128_t>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<__uint128_t>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform on [0, 1) with 53 random bits.
  double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Draws `count` distinct values from [0, universe) in the order produced by a
// partial Fisher-Yates shuffle of 0..universe-1. The first j outputs of a
// draw of size count are the complete output of a draw of size j with the
// same generator state, so samples of different sizes are coupled.
//
// Runs in O(count) expected time and memory; storage for displaced slots is
// chosen by size but never changes the output.
class DistinctSampler {
 public:
  void sample(Rng& rng, std::uint64_t universe, std::uint64_t count,
              std::vector<std::uint64_t>& out);

 private:
  std::uint64_t lookup(std::uint64_t slot) const;
  void store(std::uint64_t slot, std::uint64_t value);

  bool use_map_ = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> small_;
  std::unordered_map<std::uint64_t, std::uint64_t> large_;
};

}  // namespace kout

#endif  // KOUT_RNG_HPP_
