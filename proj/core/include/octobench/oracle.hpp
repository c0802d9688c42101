// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force integer-point enumeration for small dimensions. Shares no code
// with the closure algorithms; used by tests and `octobench verify --oracle`.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "octobench/constraint.hpp"
#include "octobench/octagon.hpp"

namespace octobench::oracle {

/// Calls fn on every point of [-box, box]^n in lexicographic order.
void for_each_point(std::size_t n, std::int64_t box, const std::function<void(std::span<const std::int64_t>)>& fn);

/// Membership straight from the constraint list.
bool member(std::span<const Constraint> constraints, std::span<const std::int64_t> point);

/// Membership from raw matrix entries (V_j - V_i <= m[i][j]).
bool member(const Octagon& o, std::span<const std::int64_t> point);

/// Tightest octagonal bounds realized by the integer points of a set.
struct TightBounds {
    std::size_t n = 0;
    bool empty = true;
    /// Row-major 2n x 2n; entry (i, j) is max(V_j - V_i), nullopt if unbounded.
    std::vector<std::optional<std::int64_t>> max_form;
};

/// Enumerates [-(box+margin), box+margin]^n. A form counts as bounded when
/// its maximum over the inner box equals its maximum over the outer box.
TightBounds tight_bounds(std::size_t n, const std::function<bool(std::span<const std::int64_t>)>& in_set,
                         std::int64_t box, std::int64_t margin = 4);

/// The canonical matrix implied by tight bounds (bottom if empty).
Octagon to_octagon(const TightBounds& t);

/// Canonical closure of a constraint list computed by enumeration.
Octagon closure_by_enumeration(std::size_t n, std::span<const Constraint> constraints, std::int64_t box);

/// True iff both matrices admit the same integer points in [-box, box]^n.
bool same_points(const Octagon& a, const Octagon& b, std::int64_t box);

/// True iff every integer point of b in [-box, box]^n lies in a.
bool subset_points(const Octagon& b, const Octagon& a, std::int64_t box);

} // namespace octobench::oracle
