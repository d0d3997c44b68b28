// SPDX-License-Identifier: Apache-2.0
//
// leosim - multibeam LEO satellite downlink precoding simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

namespace leosim
{

// Counter-based splitmix64 generator. Every Monte Carlo draw in the
// simulator comes from a stream derived with derive_stream(), so results are
// reproducible bit for bit across platforms, standard libraries, and worker
// counts. Uniform doubles are built directly from the top 53 bits; no
// <random> distribution is involved, because those are not portable across
// standard library implementations.
class SplitMix64
{
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [-bound, bound).
    double next_symmetric(double bound) { return bound * (2.0 * next_unit() - 1.0); }

  private:
    std::uint64_t state_;
};

// Derives an independent sub-stream seed from a base seed and two key words
// by chaining splitmix64 scrambles. Used to give every (seed, sweep point,
// iteration) triple its own stream.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t key_a, std::uint64_t key_b)
{
    std::uint64_t s = SplitMix64(seed).next();
    s = SplitMix64(s ^ key_a).next();
    s = SplitMix64(s ^ key_b).next();
    return s;
}

} // namespace leosim
