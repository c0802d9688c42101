// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "octobench/bound.hpp"

namespace octobench {

enum class ConstraintKind : std::uint8_t {
    DiffLE,    ///< x_i - x_j <= c
    SumLE,     ///< x_i + x_j <= c
    NegSumLE,  ///< -x_i - x_j <= c
    NegDiffLE, ///< x_j - x_i <= c
    UpperLE,   ///< x_i <= c
    LowerGE,   ///< x_i >= c
};

[[nodiscard]] constexpr bool is_unary(ConstraintKind k) noexcept {
    return k == ConstraintKind::UpperLE || k == ConstraintKind::LowerGE;
}

std::string_view to_string(ConstraintKind k) noexcept;

/// A single octagonal constraint with a finite constant.
struct Constraint {
    ConstraintKind kind{ConstraintKind::UpperLE};
    std::size_t i{0};
    std::size_t j{0}; ///< ignored for unary kinds
    Bound c{0};

    static Constraint diff(std::size_t i, std::size_t j, std::int64_t c);
    static Constraint sum(std::size_t i, std::size_t j, std::int64_t c);
    static Constraint neg_sum(std::size_t i, std::size_t j, std::int64_t c);
    static Constraint neg_diff(std::size_t i, std::size_t j, std::int64_t c);
    static Constraint upper(std::size_t i, std::int64_t c);
    static Constraint lower(std::size_t i, std::int64_t c);

    /// Throws std::invalid_argument if i == j for a binary kind or c is infinite.
    void validate() const;

    /// Largest variable id mentioned.
    [[nodiscard]] std::size_t max_var() const noexcept { return is_unary(kind) ? i : (i > j ? i : j); }

    /// Value of the constrained linear form at an integer point.
    [[nodiscard]] std::int64_t form_value(const std::int64_t* point) const noexcept;

    /// True iff the integer point satisfies the constraint.
    [[nodiscard]] bool satisfied_by(const std::int64_t* point) const;

    /// Human-readable form, e.g. "x0 - x1 <= 3".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

} // namespace octobench
