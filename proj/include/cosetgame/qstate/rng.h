// Copyright 2026 The Coset Game Authors
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

#ifndef COSETGAME_QSTATE_RNG_H
#define COSETGAME_QSTATE_RNG_H

#include <cstdint>

namespace cosetgame {

/// SplitMix64: a counter-based generator. Output t is a fixed mixing function
/// of (seed + t * golden_gamma), so streams are reproducible on every
/// platform and cheap to fork.
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed) {
    }

    /// Independent stream for item `index` of a run seeded with `seed`.
    static Rng substream(uint64_t seed, uint64_t index) {
        return Rng(mix(mix(seed) ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL)));
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bit() {
        return (next_u64() >> 63) != 0;
    }

    /// Uniform integer in [0, bound), bound > 0, by rejection.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

   private:
    uint64_t state_;
};

}  // namespace cosetgame

#endif
