// Copyright 2026 The pingpong-eve Authors
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

#ifndef PINGPONG_RNG_H
#define PINGPONG_RNG_H

#include <cstdint>
#include <random>

namespace pingpong {

/// Seeded, splittable random source.
///
/// Uniform doubles are produced directly from the 64-bit engine output rather
/// than through std::uniform_real_distribution, so sampled streams are
/// identical across standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    /// Independent stream derived deterministically from (seed, index).
    Rng substream(uint64_t index) const;

    uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    bool bernoulli(double p);

    uint64_t seed() const {
        return seed_;
    }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

uint64_t splitmix64(uint64_t x);

}  // namespace pingpong

#endif
