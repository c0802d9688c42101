// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

namespace octobench {

namespace detail {
__extension__ using uint128 = unsigned __int128;
} // namespace detail

/// splitmix64 finalizer (Stafford variant 13 constants).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

/// splitmix64: state advances by the golden-ratio increment, output is the
/// finalizer of the new state. Identical on every platform.
class Rng {
  public:
    explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform integer in [lo, hi] by 128-bit multiply-high reduction.
    constexpr std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept {
        const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1U;
        if (span == 0) { // full 64-bit range
            return static_cast<std::int64_t>(next());
        }
        const auto scaled = static_cast<std::uint64_t>((static_cast<detail::uint128>(next()) * span) >> 64U);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + scaled);
    }

    /// Uniform index in [0, n). n must be positive.
    constexpr std::size_t below(std::size_t n) noexcept {
        return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1));
    }

    [[nodiscard]] constexpr std::uint64_t state() const noexcept { return state_; }

  private:
    std::uint64_t state_;
};

} // namespace octobench
