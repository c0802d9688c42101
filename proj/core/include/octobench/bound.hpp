// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace octobench {

namespace detail {
[[noreturn]] void arithmetic_fault(const char* what, std::int64_t a, std::int64_t b);
} // namespace detail

/// Extended integer used as the constant of a DBM entry: either a finite
/// value inside the headroom band [-2^62, 2^62] or +infinity.
///
/// Infinity is stored out of band, so it can never be observed as a finite
/// value; value() on an infinite bound is a contract violation.
class Bound {
  public:
    static constexpr std::int64_t max_finite = std::int64_t{1} << 62;
    static constexpr std::int64_t min_finite = -max_finite;

    /// +infinity.
    constexpr Bound() noexcept = default;

    // NOLINTNEXTLINE(google-explicit-constructor)
    constexpr Bound(std::int64_t v) : raw_(v) {
        if (v < min_finite || v > max_finite) {
            throw std::out_of_range("bound outside headroom band: " + std::to_string(v));
        }
    }

    static constexpr Bound infinity() noexcept { return Bound{}; }

    [[nodiscard]] constexpr bool is_infinite() const noexcept { return raw_ == inf_raw; }
    [[nodiscard]] constexpr bool is_finite() const noexcept { return raw_ != inf_raw; }

    [[nodiscard]] constexpr std::int64_t value() const {
        if (is_infinite()) {
            throw std::logic_error("value() on an infinite bound");
        }
        return raw_;
    }

    /// Total order; every finite bound is below +infinity.
    friend constexpr auto operator<=>(Bound a, Bound b) noexcept = default;
    friend constexpr bool operator==(Bound a, Bound b) noexcept = default;

    friend constexpr Bound bound_add(Bound a, Bound b) noexcept;
    friend constexpr Bound bound_min(Bound a, Bound b) noexcept;
    friend constexpr Bound bound_max(Bound a, Bound b) noexcept;
    friend constexpr Bound halve_floor(Bound b) noexcept;
    friend constexpr Bound negate_finite(Bound b);
    friend void relax_row(Bound* dst, const Bound* src, Bound via, std::size_t len) noexcept;

    [[nodiscard]] std::string to_string() const { return is_infinite() ? "+oo" : std::to_string(raw_); }

  private:
    static constexpr std::int64_t inf_raw = std::numeric_limits<std::int64_t>::max();

    struct unchecked_tag {};
    constexpr Bound(std::int64_t v, unchecked_tag) noexcept : raw_(v) {}

    std::int64_t raw_ = inf_raw;
};

/// +infinity absorbs; finite sums must stay inside the headroom band.
constexpr Bound bound_add(Bound a, Bound b) noexcept {
    if (a.is_infinite() || b.is_infinite()) {
        return Bound{};
    }
    std::int64_t sum = 0;
    if (__builtin_add_overflow(a.raw_, b.raw_, &sum) || sum < Bound::min_finite || sum > Bound::max_finite)
        [[unlikely]] {
        detail::arithmetic_fault("bound_add", a.raw_, b.raw_);
    }
    return Bound{sum, Bound::unchecked_tag{}};
}

constexpr Bound bound_min(Bound a, Bound b) noexcept { return b < a ? b : a; }

/// dst[j] = min(dst[j], via + src[j]) for j < len; via must be finite.
/// Branch-free equivalent of a bound_add / bound_min loop.
inline void relax_row(Bound* dst, const Bound* src, Bound via, std::size_t len) noexcept {
    const auto base = static_cast<std::uint64_t>(via.raw_);
    bool out_of_band = false;
    for (std::size_t j = 0; j < len; ++j) {
        const std::int64_t s = src[j].raw_;
        // Operands lie in [-2^62, 2^62]; the only wrapping sum is 2^63, which
        // lands below min_finite and is caught below.
        const auto sum = static_cast<std::int64_t>(base + static_cast<std::uint64_t>(s));
        const bool finite = s != Bound::inf_raw;
        out_of_band |= finite & ((sum > Bound::max_finite) | (sum < Bound::min_finite));
        const std::int64_t cand = finite ? sum : Bound::inf_raw;
        dst[j].raw_ = cand < dst[j].raw_ ? cand : dst[j].raw_;
    }
    if (out_of_band) [[unlikely]] {
        detail::arithmetic_fault("relax_row", via.raw_, 0);
    }
}
constexpr Bound bound_max(Bound a, Bound b) noexcept { return a < b ? b : a; }

/// Floor division by two; +infinity stays +infinity.
constexpr Bound halve_floor(Bound b) noexcept {
    if (b.is_infinite()) {
        return b;
    }
    // Arithmetic shift is floor division for two's complement.
    return Bound{b.raw_ >> 1, Bound::unchecked_tag{}};
}

constexpr Bound negate_finite(Bound b) {
    if (b.is_infinite()) {
        throw std::logic_error("negate_finite on +oo");
    }
    return Bound{-b.raw_, Bound::unchecked_tag{}};
}

inline std::ostream& operator<<(std::ostream& os, Bound b) { return os << b.to_string(); }

/// Row/column index into a 2n x 2n octagon matrix. Variable k owns index 2k
/// (the +v_k form) and 2k+1 (the -v_k form).
class DbmIndex {
  public:
    constexpr explicit DbmIndex(std::size_t raw) noexcept : raw_(raw) {}

    static constexpr DbmIndex pos(std::size_t var) noexcept { return DbmIndex{2 * var}; }
    static constexpr DbmIndex neg(std::size_t var) noexcept { return DbmIndex{2 * var + 1}; }

    [[nodiscard]] constexpr std::size_t raw() const noexcept { return raw_; }
    [[nodiscard]] constexpr std::size_t var() const noexcept { return raw_ >> 1; }
    [[nodiscard]] constexpr bool is_negative_form() const noexcept { return (raw_ & 1U) != 0; }

    friend constexpr auto operator<=>(DbmIndex, DbmIndex) noexcept = default;

  private:
    std::size_t raw_;
};

/// Coherence mirror: flips the lowest bit (2k <-> 2k+1).
constexpr std::size_t bar(std::size_t i) noexcept { return i ^ 1U; }
constexpr DbmIndex bar(DbmIndex i) noexcept { return DbmIndex{bar(i.raw())}; }

} // namespace octobench
