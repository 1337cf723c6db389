// Copyright 2026 The mnrisk Authors
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

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace mnrisk {

/// Philox4x32 with 10 rounds (Salmon et al., SC'11): a keyed bijection on
/// 128-bit counters. Stateless; the stream classes below wrap it.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter apply(Counter ctr, Key key) noexcept;
};

/// 64-bit finalizer from SplitMix64; used to derive child seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Child seed for a named sub-computation (e.g. one k of a sweep).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

/// UniformRandomBitGenerator over the substream identified by
/// (seed, stream). Output i is a pure function of (seed, stream, i), so a
/// chunk of work draws the same numbers no matter which thread runs it.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform on the open interval (0, 1) with 53 random bits.
    double uniform() noexcept {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Unit-rate exponential.
    double exponential() noexcept { return -std::log(uniform()); }

private:
    Philox4x32::Key key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    Philox4x32::Counter buffer_{};
    int used_ = 4;
};

} // namespace mnrisk
