// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/octagon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "octagon_access.hpp"

namespace octobench {

Octagon Octagon::top(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("octagon dimension must be at least 1");
    }
    const std::size_t d = 2 * n;
    std::vector<Bound> m(d * d, Bound::infinity());
    for (std::size_t i = 0; i < d; ++i) {
        m[i * d + i] = Bound{0};
    }
    return Octagon{n, std::move(m), ClosureState::StronglyClosed, false};
}

Octagon Octagon::bottom(std::size_t n) {
    Octagon o = top(n);
    o.bottom_ = true;
    o.closed_ = ClosureState::StronglyClosed;
    return o;
}

Octagon Octagon::from_matrix(std::size_t n, std::vector<Bound> entries, ClosureState state) {
    if (n == 0) {
        throw std::invalid_argument("octagon dimension must be at least 1");
    }
    const std::size_t d = 2 * n;
    if (entries.size() != d * d) {
        throw std::invalid_argument("matrix size " + std::to_string(entries.size()) + " does not match 2n x 2n");
    }
    for (std::size_t i = 0; i < d; ++i) {
        entries[i * d + i] = Bound{0};
    }
    return Octagon{n, std::move(entries), state, false};
}

namespace {

void require_same_dim(const Octagon& a, const Octagon& b) {
    if (a.num_vars() != b.num_vars()) {
        throw std::invalid_argument("octagon dimension mismatch: " + std::to_string(a.num_vars()) + " vs " +
                                    std::to_string(b.num_vars()));
    }
}

void require_var(const Octagon& o, std::size_t v) {
    if (v >= o.num_vars()) {
        throw std::out_of_range("variable x" + std::to_string(v) + " out of range for n=" +
                                std::to_string(o.num_vars()));
    }
}

} // namespace

EncodedEdge encode(const Constraint& k, std::size_t n) {
    k.validate();
    if (k.i >= n || (!is_unary(k.kind) && k.j >= n)) {
        throw std::out_of_range("constraint " + k.to_string() + " mentions a variable outside n=" + std::to_string(n));
    }
    const std::size_t pi = 2 * k.i;
    const std::size_t ni = pi + 1;
    const std::size_t pj = 2 * k.j;
    const std::size_t nj = pj + 1;
    const std::int64_t c = k.c.value();
    switch (k.kind) {
    case ConstraintKind::UpperLE:
    case ConstraintKind::LowerGE: {
        if (c > Bound::max_finite / 2 || c < Bound::min_finite / 2) {
            throw std::out_of_range("unary constant " + std::to_string(c) + " leaves the headroom band when doubled");
        }
        return k.kind == ConstraintKind::UpperLE ? EncodedEdge{ni, pi, Bound{2 * c}} : EncodedEdge{pi, ni, Bound{-2 * c}};
    }
    case ConstraintKind::DiffLE: return {pj, pi, k.c};
    case ConstraintKind::SumLE: return {nj, pi, k.c};
    case ConstraintKind::NegSumLE: return {pj, ni, k.c};
    case ConstraintKind::NegDiffLE: return {pi, pj, k.c};
    }
    throw std::logic_error("unknown constraint kind");
}

Octagon add_constraint(const Octagon& o, const Constraint& k) {
    const EncodedEdge e = encode(k, o.num_vars());
    Octagon out = o;
    if (o.is_bottom()) {
        return out;
    }
    const std::size_t d = o.dim();
    Bound* m = OctagonAccess::data(out);
    Bound& entry = m[e.row * d + e.col];
    if (!(e.value < entry)) {
        return out;
    }
    entry = e.value;
    m[bar(e.col) * d + bar(e.row)] = e.value;
    OctagonAccess::set_closed(out, ClosureState::Unknown);
    return out;
}

Octagon join(const Octagon& a, const Octagon& b) {
    require_same_dim(a, b);
    if (a.is_bottom()) {
        return b;
    }
    if (b.is_bottom()) {
        return a;
    }
    Octagon out = a;
    Bound* m = OctagonAccess::data(out);
    const auto rhs = b.entries();
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        m[i] = bound_max(m[i], rhs[i]);
    }
    OctagonAccess::set_closed(out, a.is_closed() && b.is_closed() ? ClosureState::StronglyClosed
                                                                  : ClosureState::Unknown);
    return out;
}

Octagon meet(const Octagon& a, const Octagon& b) {
    require_same_dim(a, b);
    if (a.is_bottom()) {
        return a;
    }
    if (b.is_bottom()) {
        return b;
    }
    Octagon out = a;
    Bound* m = OctagonAccess::data(out);
    const auto rhs = b.entries();
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        m[i] = bound_min(m[i], rhs[i]);
    }
    OctagonAccess::set_closed(out, ClosureState::Unknown);
    return out;
}

Octagon widen(const Octagon& a, const Octagon& b) {
    require_same_dim(a, b);
    if (a.is_bottom()) {
        return b;
    }
    if (b.is_bottom()) {
        return a;
    }
    Octagon out = a;
    Bound* m = OctagonAccess::data(out);
    const auto rhs = b.entries();
    bool changed = false;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        if (m[i] < rhs[i]) {
            m[i] = Bound::infinity();
            changed = true;
        }
    }
    if (changed) {
        OctagonAccess::set_closed(out, ClosureState::Unknown);
    }
    return out;
}

Octagon forget(const Octagon& o, std::size_t var) {
    require_var(o, var);
    if (o.is_bottom()) {
        return o;
    }
    if (!o.is_closed()) {
        throw std::logic_error("forget requires a strongly closed octagon");
    }
    Octagon out = o;
    Bound* m = OctagonAccess::data(out);
    const std::size_t d = o.dim();
    for (const std::size_t v : {2 * var, 2 * var + 1}) {
        for (std::size_t k = 0; k < d; ++k) {
            if (k != v) {
                m[v * d + k] = Bound::infinity();
                m[k * d + v] = Bound::infinity();
            }
        }
    }
    return out;
}

bool includes(const Octagon& a, const Octagon& b) {
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

bool equals(const Octagon& a, const Octagon& b) {
    require_same_dim(a, b);
    if (a.is_bottom() || b.is_bottom()) {
        return a.is_bottom() && b.is_bottom();
    }
    const auto lhs = a.entries();
    const auto rhs = b.entries();
    return std::equal(lhs.begin(), lhs.end(), rhs.begin());
}

Interval interval_of(const Octagon& o, std::size_t var) {
    require_var(o, var);
    if (o.is_bottom()) {
        throw std::logic_error("interval_of on bottom");
    }
    Interval r;
    const Bound upper2 = o.at(DbmIndex::neg(var), DbmIndex::pos(var));
    const Bound lower2 = o.at(DbmIndex::pos(var), DbmIndex::neg(var));
    if (upper2.is_finite()) {
        r.hi = halve_floor(upper2).value();
    }
    if (lower2.is_finite()) {
        r.lo = -halve_floor(lower2).value();
    }
    return r;
}

std::size_t related_pairs(const Octagon& o) {
    const std::size_t n = o.num_vars();
    std::size_t count = 0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            bool related = false;
            for (std::size_t i = 2 * x; i < 2 * x + 2 && !related; ++i) {
                for (std::size_t j = 2 * y; j < 2 * y + 2 && !related; ++j) {
                    related = o.at(i, j).is_finite() || o.at(j, i).is_finite();
                }
            }
            count += related ? 1 : 0;
        }
    }
    return count;
}

double achieved_density(const Octagon& o) {
    if (o.is_bottom()) {
        throw std::logic_error("achieved_density on bottom");
    }
    const std::size_t n = o.num_vars();
    if (n < 2) {
        return 0.0;
    }
    return static_cast<double>(related_pairs(o)) / static_cast<double>(n * (n - 1) / 2);
}

Octagon shift_variable(const Octagon& o, std::size_t var, std::int64_t delta) {
    require_var(o, var);
    if (o.is_bottom()) {
        return o;
    }
    Octagon out = o;
    Bound* m = OctagonAccess::data(out);
    const std::size_t d = o.dim();
    const auto offset = [&](std::size_t idx) -> std::int64_t {
        if (idx == 2 * var) {
            return delta;
        }
        if (idx == 2 * var + 1) {
            return -delta;
        }
        return 0;
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const std::int64_t shift = offset(j) - offset(i);
            if (shift != 0) {
                m[i * d + j] = bound_add(m[i * d + j], Bound{shift});
            }
        }
    }
    return out;
}

bool satisfies(const Octagon& o, std::span<const std::int64_t> point) {
    if (point.size() != o.num_vars()) {
        throw std::invalid_argument("point dimension mismatch");
    }
    if (o.is_bottom()) {
        return false;
    }
    const std::size_t d = o.dim();
    const auto value = [&](std::size_t idx) { return (idx & 1U) != 0 ? -point[idx >> 1] : point[idx >> 1]; };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Bound b = o.at(i, j);
            if (b.is_finite() && value(j) - value(i) > b.value()) {
                return false;
            }
        }
    }
    return true;
}

bool is_coherent(const Octagon& o) {
    const std::size_t d = o.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (o.at(i, j) != o.at(bar(j), bar(i))) {
                return false;
            }
        }
    }
    return true;
}

bool has_zero_diagonal(const Octagon& o) {
    for (std::size_t i = 0; i < o.dim(); ++i) {
        if (o.at(i, i) != Bound{0}) {
            return false;
        }
    }
    return true;
}

bool is_strongly_closed(const Octagon& o) {
    if (o.is_bottom()) {
        return true;
    }
    if (!has_zero_diagonal(o)) {
        return false;
    }
    const std::size_t d = o.dim();
    for (std::size_t i = 0; i < d; ++i) {
        const Bound unary = o.at(i, bar(i));
        if (unary.is_finite() && (unary.value() & 1) != 0) {
            return false;
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Bound ij = o.at(i, j);
            if (bound_add(halve_floor(o.at(i, bar(i))), halve_floor(o.at(bar(j), j))) < ij) {
                return false;
            }
            for (std::size_t k = 0; k < d; ++k) {
                if (bound_add(o.at(i, k), o.at(k, j)) < ij) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace octobench
