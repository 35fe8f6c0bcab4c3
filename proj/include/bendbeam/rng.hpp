// SPDX-License-Identifier: Apache-2.0
//
// bendbeam: near-field bending beams and physical layer security
// Copyright (C) 2026 The bendbeam authors
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

#ifndef BENDBEAM_RNG_HPP
#define BENDBEAM_RNG_HPP

#include <cstdint>

namespace bendbeam
{
    // Counter-based stream built on the SplitMix64 finalizer.
    //
    // Stream i of seed s starts from state mix(s ^ mix(i + gamma)) and steps by
    // gamma; each output is mix(state). Monte-Carlo sample i always draws from
    // stream i, so estimates do not depend on how samples are split between
    // workers. Changing any constant here changes every golden output.
    class CounterRng
    {
    public:
        static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;

        constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed ^ mix(stream + gamma))) {}

        static constexpr std::uint64_t mix(std::uint64_t z)
        {
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            return z ^ (z >> 31);
        }

        constexpr std::uint64_t next()
        {
            state_ += gamma;
            return mix(state_);
        }

        // Uniform on [0, 1) with 53 random bits.
        constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    private:
        std::uint64_t state_;
    };
}

#endif
