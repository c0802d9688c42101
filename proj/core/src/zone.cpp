// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/zone.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace octobench {

struct ZoneAccess {
    static Bound* data(ZoneDbm& z) noexcept { return z.m_.data(); }
    static void set_closed(ZoneDbm& z, ClosureState s) noexcept { z.closed_ = s; }
    static void set_bottom(ZoneDbm& z) noexcept {
        z.bottom_ = true;
        z.closed_ = ClosureState::StronglyClosed;
    }
};

ZoneDbm ZoneDbm::top(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("zone dimension must be at least 1");
    }
    const std::size_t d = n + 1;
    std::vector<Bound> m(d * d, Bound::infinity());
    for (std::size_t i = 0; i < d; ++i) {
        m[i * d + i] = Bound{0};
    }
    return ZoneDbm{n, std::move(m), ClosureState::StronglyClosed, false};
}

ZoneDbm ZoneDbm::bottom(std::size_t n) {
    ZoneDbm z = top(n);
    z.bottom_ = true;
    return z;
}

namespace {
void require_same_dim(const ZoneDbm& a, const ZoneDbm& b) {
    if (a.num_vars() != b.num_vars()) {
        throw std::invalid_argument("zone dimension mismatch: " + std::to_string(a.num_vars()) + " vs " +
                                    std::to_string(b.num_vars()));
    }
}
} // namespace

ZoneDbm zone_add_constraint(const ZoneDbm& z, std::size_t i, std::size_t j, std::int64_t c) {
    if (i > z.num_vars() || j > z.num_vars()) {
        throw std::out_of_range("zone index out of range for n=" + std::to_string(z.num_vars()));
    }
    if (i == j) {
        throw std::invalid_argument("zone constraint needs two distinct indices");
    }
    ZoneDbm out = z;
    if (z.is_bottom()) {
        return out;
    }
    Bound& entry = ZoneAccess::data(out)[j * z.dim() + i];
    const Bound value{c};
    if (value < entry) {
        entry = value;
        ZoneAccess::set_closed(out, ClosureState::Unknown);
    }
    return out;
}

ZoneDbm zone_close(const ZoneDbm& z) {
    if (z.is_bottom()) {
        return z;
    }
    ZoneDbm out = z;
    Bound* m = ZoneAccess::data(out);
    const std::size_t d = z.dim();
    for (std::size_t k = 0; k < d; ++k) {
        const Bound* row_k = m + k * d;
        for (std::size_t i = 0; i < d; ++i) {
            const Bound ik = m[i * d + k];
            if (ik.is_infinite() || i == k) {
                continue;
            }
            Bound* row_i = m + i * d;
            for (std::size_t j = 0; j < d; ++j) {
                const Bound via = bound_add(ik, row_k[j]);
                if (via < row_i[j]) {
                    row_i[j] = via;
                }
            }
            if (row_i[i] < Bound{0}) {
                ZoneAccess::set_bottom(out);
                return out;
            }
        }
    }
    ZoneAccess::set_closed(out, ClosureState::StronglyClosed);
    return out;
}

ZoneDbm zone_join(const ZoneDbm& a, const ZoneDbm& b) {
    require_same_dim(a, b);
    if (a.is_bottom()) {
        return b;
    }
    if (b.is_bottom()) {
        return a;
    }
    ZoneDbm out = a;
    Bound* m = ZoneAccess::data(out);
    const auto rhs = b.entries();
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        m[i] = bound_max(m[i], rhs[i]);
    }
    ZoneAccess::set_closed(out, a.is_closed() && b.is_closed() ? ClosureState::StronglyClosed : ClosureState::Unknown);
    return out;
}

bool zone_includes(const ZoneDbm& a, const ZoneDbm& b) {
    require_same_dim(a, b);
    if (b.is_bottom()) {
        return true;
    }
    if (a.is_bottom()) {
        return false;
    }
    const auto lhs = a.entries();
    const auto rhs = b.entries();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] < rhs[i]) {
            return false;
        }
    }
    return true;
}

bool zone_equals(const ZoneDbm& a, const ZoneDbm& b) {
    require_same_dim(a, b);
    if (a.is_bottom() || b.is_bottom()) {
        return a.is_bottom() && b.is_bottom();
    }
    return std::ranges::equal(a.entries(), b.entries());
}

Interval zone_interval_of(const ZoneDbm& z, std::size_t v) {
    if (v == 0 || v > z.num_vars()) {
        throw std::out_of_range("zone variable x" + std::to_string(v) + " out of range");
    }
    if (z.is_bottom()) {
        throw std::logic_error("zone_interval_of on bottom");
    }
    Interval r;
    if (z.at(0, v).is_finite()) {
        r.hi = z.at(0, v).value();
    }
    if (z.at(v, 0).is_finite()) {
        r.lo = -z.at(v, 0).value();
    }
    return r;
}

double zone_achieved_density(const ZoneDbm& z) {
    const std::size_t n = z.num_vars();
    if (n < 2) {
        return 0.0;
    }
    std::size_t related = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            related += (z.at(i, j).is_finite() || z.at(j, i).is_finite()) ? 1 : 0;
        }
    }
    return static_cast<double>(related) / static_cast<double>(n * (n - 1) / 2);
}

bool zone_satisfies(const ZoneDbm& z, std::span<const std::int64_t> point) {
    if (point.size() != z.num_vars()) {
        throw std::invalid_argument("point dimension mismatch");
    }
    if (z.is_bottom()) {
        return false;
    }
    const auto value = [&](std::size_t idx) -> std::int64_t { return idx == 0 ? 0 : point[idx - 1]; };
    for (std::size_t i = 0; i < z.dim(); ++i) {
        for (std::size_t j = 0; j < z.dim(); ++j) {
            const Bound b = z.at(i, j);
            if (b.is_finite() && value(j) - value(i) > b.value()) {
                return false;
            }
        }
    }
    return true;
}

bool zone_has_zero_diagonal(const ZoneDbm& z) {
    for (std::size_t i = 0; i < z.dim(); ++i) {
        if (z.at(i, i) != Bound{0}) {
            return false;
        }
    }
    return true;
}

bool zone_is_closed(const ZoneDbm& z) {
    if (z.is_bottom()) {
        return true;
    }
    const std::size_t d = z.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                if (bound_add(z.at(i, k), z.at(k, j)) < z.at(i, j)) {
                    return false;
                }
            }
        }
    }
    return zone_has_zero_diagonal(z);
}

} // namespace octobench
