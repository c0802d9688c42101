// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace octobench::oracle {

void for_each_point(std::size_t n, std::int64_t box, const std::function<void(std::span<const std::int64_t>)>& fn) {
    std::vector<std::int64_t> p(n, -box);
    while (true) {
        fn(p);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (p[k] < box) {
                ++p[k];
                break;
            }
            p[k] = -box;
            if (k == 0) {
                return;
            }
        }
        if (n == 0) {
            return;
        }
    }
}

bool member(std::span<const Constraint> constraints, std::span<const std::int64_t> point) {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Constraint& k) { return k.satisfied_by(point.data()); });
}

namespace {
std::int64_t signed_form(std::span<const std::int64_t> point, std::size_t idx) {
    return (idx & 1U) != 0 ? -point[idx / 2] : point[idx / 2];
}
} // namespace

bool member(const Octagon& o, std::span<const std::int64_t> point) {
    if (o.is_bottom()) {
        return false;
    }
    const std::size_t d = o.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Bound b = o.at(i, j);
            if (b.is_finite() && signed_form(point, j) - signed_form(point, i) > b.value()) {
                return false;
            }
        }
    }
    return true;
}

TightBounds tight_bounds(std::size_t n, const std::function<bool(std::span<const std::int64_t>)>& in_set,
                         std::int64_t box, std::int64_t margin) {
    const std::size_t d = 2 * n;
    constexpr std::int64_t none = std::numeric_limits<std::int64_t>::min();
    std::vector<std::int64_t> inner(d * d, none);
    std::vector<std::int64_t> outer(d * d, none);
    bool any_inner = false;
    for_each_point(n, box + margin, [&](std::span<const std::int64_t> p) {
        if (!in_set(p)) {
            return;
        }
        const bool is_inner = std::all_of(p.begin(), p.end(), [&](std::int64_t v) { return v >= -box && v <= box; });
        any_inner = any_inner || is_inner;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const std::int64_t v = signed_form(p, j) - signed_form(p, i);
                outer[i * d + j] = std::max(outer[i * d + j], v);
                if (is_inner) {
                    inner[i * d + j] = std::max(inner[i * d + j], v);
                }
            }
        }
    });
    TightBounds t;
    t.n = n;
    t.empty = !any_inner;
    t.max_form.assign(d * d, std::nullopt);
    if (!t.empty) {
        for (std::size_t e = 0; e < d * d; ++e) {
            if (inner[e] == outer[e]) {
                t.max_form[e] = inner[e];
            }
        }
    }
    return t;
}

Octagon to_octagon(const TightBounds& t) {
    if (t.empty) {
        return Octagon::bottom(t.n);
    }
    std::vector<Bound> m;
    m.reserve(t.max_form.size());
    for (const auto& v : t.max_form) {
        m.push_back(v ? Bound{*v} : Bound::infinity());
    }
    return Octagon::from_matrix(t.n, std::move(m), ClosureState::StronglyClosed);
}

Octagon closure_by_enumeration(std::size_t n, std::span<const Constraint> constraints, std::int64_t box) {
    return to_octagon(tight_bounds(
        n, [&](std::span<const std::int64_t> p) { return member(constraints, p); }, box));
}

bool same_points(const Octagon& a, const Octagon& b, std::int64_t box) {
    if (a.num_vars() != b.num_vars()) {
        throw std::invalid_argument("dimension mismatch");
    }
    bool same = true;
    for_each_point(a.num_vars(), box, [&](std::span<const std::int64_t> p) {
        if (same && member(a, p) != member(b, p)) {
            same = false;
        }
    });
    return same;
}

bool subset_points(const Octagon& b, const Octagon& a, std::int64_t box) {
    bool subset = true;
    for_each_point(a.num_vars(), box, [&](std::span<const std::int64_t> p) {
        if (subset && member(b, p) && !member(a, p)) {
            subset = false;
        }
    });
    return subset;
}

} // namespace octobench::oracle
