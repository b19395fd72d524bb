// Copyright 2026 The exitplan Authors
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

#ifndef EXITPLAN_RANDOM_HPP_
#define EXITPLAN_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>

namespace exitplan
{

/// SplitMix64: the counter-based 64-bit generator all seeded behavior in this
/// project flows through. Pinned (rather than std::mt19937_64 plus standard
/// distributions) so that seeded outputs are identical across standard
/// libraries and stay stable across releases.
class SplitMix64
{
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64()
  {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 bits of entropy.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Gaussian draw via Box-Muller on two uniforms; one variate per call.
  double next_normal(double mean, double stddev)
  {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log() finite
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Derives an independent stream seed, for per-scenario sub-generators.
  std::uint64_t fork_seed() { return next_u64(); }

private:
  std::uint64_t state_;
};

}  // namespace exitplan

#endif  // EXITPLAN_RANDOM_HPP_
