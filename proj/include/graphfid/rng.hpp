// Copyright 2026 The graphfid Authors
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

#ifndef GRAPHFID_RNG_HPP
#define GRAPHFID_RNG_HPP

#include <cstdint>

namespace graphfid {

/// SplitMix64 finalizer (Steele, Lea, Flood; Vigna's fixed-increment form).
constexpr uint64_t split_mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stateless counter-based generator: the value at coordinates (a, b) under
/// `seed` never depends on evaluation order, so parallel partitioning cannot
/// change a simulated stream.
constexpr uint64_t counter_hash(uint64_t seed, uint64_t a, uint64_t b) {
    uint64_t z = split_mix64(seed ^ 0x243f6a8885a308d3ULL);
    z = split_mix64(z ^ a);
    z = split_mix64(z ^ b);
    return z;
}

/// Uniform double in [0, 1) from the top 53 bits of counter_hash.
inline double counter_uniform(uint64_t seed, uint64_t a, uint64_t b) {
    return static_cast<double>(counter_hash(seed, a, b) >> 11) * 0x1.0p-53;
}

}  // namespace graphfid

#endif
