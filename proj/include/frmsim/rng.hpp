// Copyright 2026 The frmsim Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace frmsim {

/// splitmix64 finalizer; used to decorrelate seeds for fan-out streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic pseudo-random stream.
///
/// All variates are produced from raw mt19937_64 output with fixed
/// arithmetic (no std::*_distribution), so a given seed yields the same
/// sequence on every platform and toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  /// Stream for item `index` of a fan-out rooted at `base_seed`.
  ///
  /// Seed-splitting rule: item i is seeded with
  /// splitmix64(base_seed ^ (i + 1) * 0x9E3779B97F4A7C15). Results of a
  /// parallel sweep depend only on (base_seed, index), never on thread
  /// scheduling, so serial and parallel runs agree bit for bit.
  static Rng for_item(std::uint64_t base_seed, std::uint64_t index) {
    Rng r(0);
    r.gen_.seed(splitmix64(base_seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL)));
    r.has_spare_ = false;
    return r;
  }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; pairs are cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] keeps the log finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace frmsim
