// Copyright 2026 The misobo Authors.
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

#ifndef MISO_RNG_HPP
#define MISO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace miso {

// All randomized code draws through these helpers rather than the standard
// <random> distributions, whose output is implementation-defined. The engine
// itself (mt19937_64) is fully specified, so runs are reproducible bit for
// bit across toolchains.
using Rng = std::mt19937_64;

// splitmix64 finalizer; decorrelates derived seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

// Uniform draw in [0, 1).
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform draw in (0, 1]; safe as a log() argument.
inline double uniform01_open(Rng& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Uniform integer in [0, n). n must be positive. The negligible modulo bias
// is an accepted trade for portability.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  return rng() % n;
}

// Standard normal via Box-Muller. Uses exactly two engine draws per call.
inline double normal01(Rng& rng) {
  const double u1 = uniform01_open(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace miso

#endif  // MISO_RNG_HPP
