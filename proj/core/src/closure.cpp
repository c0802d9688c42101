// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Strong integer closure of octagons: one full Floyd-Warshall variant and two
// incremental variants. All three share the same tail (unary tightening,
// consistency check, strengthening), so they agree entry-for-entry whenever
// their shortest-path stages agree.
#include <stdexcept>
#include <vector>

#include "octagon_access.hpp"
#include "octobench/octagon.hpp"

namespace octobench {

namespace {

void count(ClosureStats* stats, std::uint64_t n) {
    if (stats != nullptr) {
        stats->comparisons += n;
    }
}

/// One Floyd-Warshall pivot step, in place. Returns false if a negative
/// diagonal entry appears.
bool relax_pivot(Bound* m, std::size_t d, std::size_t k, ClosureStats* stats) {
    const Bound* row_k = m + k * d;
    std::uint64_t comparisons = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const Bound ik = m[i * d + k];
        if (ik.is_infinite() || i == k) {
            continue;
        }
        Bound* row_i = m + i * d;
        relax_row(row_i, row_k, ik, d);
        comparisons += d;
        if (row_i[i] < Bound{0}) {
            count(stats, comparisons);
            return false;
        }
    }
    count(stats, comparisons);
    return true;
}

/// Pivots k and k + 1 (k even) in one sweep. Same result and comparison
/// count as two relax_pivot calls: row k + 1 takes its pivot-k step first,
/// then every other row relaxes against snapshots of both pivot rows.
bool relax_pivot_pair(Bound* m, std::size_t d, std::size_t k, ClosureStats* stats) {
    const std::size_t k1 = k + 1;
    std::uint64_t comparisons = 0;
    Bound* row_k1 = m + k1 * d;
    if (const Bound via = row_k1[k]; via.is_finite()) {
        relax_row(row_k1, m + k * d, via, d);
        comparisons += d;
        if (row_k1[k1] < Bound{0}) {
            count(stats, comparisons);
            return false;
        }
    }
    const std::vector<Bound> pivot_rows(m + k * d, m + (k + 2) * d);
    const Bound* src_k = pivot_rows.data();
    const Bound* src_k1 = src_k + d;
    for (std::size_t i = 0; i < d; ++i) {
        if (i == k1) {
            continue;
        }
        Bound* row_i = m + i * d;
        if (const Bound via = row_i[k]; i != k && via.is_finite()) {
            relax_row(row_i, src_k, via, d);
            comparisons += d;
        }
        if (const Bound via = row_i[k1]; via.is_finite()) {
            relax_row(row_i, src_k1, via, d);
            comparisons += d;
        }
        if (row_i[i] < Bound{0}) {
            count(stats, comparisons);
            return false;
        }
    }
    count(stats, comparisons);
    return true;
}

/// Unary tightening, the paired-unary consistency test, then strengthening.
/// Expects a shortest-path closed matrix with a non-negative diagonal.
bool tighten_and_strengthen(Bound* m, std::size_t d, ClosureStats* stats, bool strengthen = true) {
    for (std::size_t i = 0; i < d; ++i) {
        Bound& unary = m[i * d + bar(i)];
        if (unary.is_finite()) {
            unary = Bound{2 * halve_floor(unary).value()};
        }
    }
    for (std::size_t i = 0; i < d; i += 2) {
        const Bound round_trip = bound_add(m[i * d + bar(i)], m[bar(i) * d + i]);
        if (round_trip < Bound{0}) {
            return false;
        }
    }
    if (!strengthen) {
        return true;
    }
    std::vector<Bound> half(d);
    for (std::size_t i = 0; i < d; ++i) {
        half[i] = halve_floor(m[i * d + bar(i)]);
    }
    for (std::size_t i = 0; i < d; ++i) {
        const Bound hi = half[i];
        if (hi.is_infinite()) {
            continue;
        }
        Bound* row_i = m + i * d;
        for (std::size_t j = 0; j < d; ++j) {
            const Bound hj = half[bar(j)];
            if (hj.is_infinite()) {
                continue;
            }
            const Bound via = bound_add(hi, hj);
            if (via < row_i[j]) {
                row_i[j] = via;
            }
        }
    }
    count(stats, d * d);
    return true;
}

Octagon finish(Octagon out, bool consistent) {
    if (consistent) {
        OctagonAccess::set_closed(out, ClosureState::StronglyClosed);
    } else {
        OctagonAccess::set_bottom(out);
    }
    return out;
}

void require_incremental_input(const Octagon& o) {
    if (o.is_bottom()) {
        throw std::logic_error("incremental closure requires a non-bottom input");
    }
    if (!o.is_closed()) {
        throw std::logic_error("incremental closure requires a strongly closed input");
    }
}

} // namespace

Octagon close_full(const Octagon& o, ClosureStats* stats) {
    if (o.is_bottom()) {
        return o;
    }
    Octagon out = o;
    Bound* m = OctagonAccess::data(out);
    const std::size_t d = o.dim();
    for (std::size_t k = 0; k < d; ++k) {
        if (!relax_pivot(m, d, k, stats)) {
            return finish(std::move(out), false);
        }
    }
    return finish(std::move(out), tighten_and_strengthen(m, d, stats));
}

Octagon close_full_faulty(const Octagon& o, ClosureFault fault) {
    if (fault == ClosureFault::None) {
        return close_full(o);
    }
    if (o.is_bottom()) {
        return o;
    }
    Octagon out = o;
    Bound* m = OctagonAccess::data(out);
    const std::size_t d = o.dim();
    for (std::size_t k = 0; k < d; ++k) {
        if (!relax_pivot(m, d, k, nullptr)) {
            return finish(std::move(out), false);
        }
    }
    return finish(std::move(out), tighten_and_strengthen(m, d, nullptr, false));
}

Octagon close_incremental_mine(const Octagon& o, const Constraint& k, ClosureStats* stats) {
    require_incremental_input(o);
    const EncodedEdge e = encode(k, o.num_vars());
    const std::size_t d = o.dim();
    if (!(e.value < o.at(e.row, e.col))) {
        return o;
    }
    Octagon out = o;
    Bound* m = OctagonAccess::data(out);
    m[e.row * d + e.col] = e.value;
    m[bar(e.col) * d + bar(e.row)] = e.value;

    // Pivots: both forms of every variable the constraint mentions.
    const std::size_t u = e.row >> 1;
    const std::size_t v = e.col >> 1;
    if (!relax_pivot_pair(m, d, 2 * u, stats) || (v != u && !relax_pivot_pair(m, d, 2 * v, stats))) {
        return finish(std::move(out), false);
    }
    return finish(std::move(out), tighten_and_strengthen(m, d, stats));
}

Octagon close_incremental_chawdhary(const Octagon& o, const Constraint& k, ClosureStats* stats) {
    require_incremental_input(o);
    const EncodedEdge e = encode(k, o.num_vars());
    const std::size_t d = o.dim();
    const std::size_t a = e.row;
    const std::size_t b = e.col;
    const Bound w = e.value;
    if (!(w < o.at(a, b))) {
        return o;
    }
    // New edges: a -> b and its mirror bar(b) -> bar(a), both of weight w.
    // In a closed matrix every shortest path uses each new edge at most once,
    // so four path shapes cover all improvements.
    const std::size_t na = bar(a);
    const std::size_t nb = bar(b);
    const Bound* old = o.entries().data();
    const Bound* row_b = old + b * d;
    const Bound* row_na = old + na * d;
    const Bound loop_via_a = bound_add(bound_add(w, old[na * d + a]), w); // bar(a) ~> a -> b, plus the mirror first
    const Bound loop_via_b = bound_add(bound_add(w, old[b * d + nb]), w); // a -> b ~> bar(b) -> bar(a)

    Octagon out = o;
    Bound* m = OctagonAccess::data(out);
    std::uint64_t comparisons = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const Bound ia = old[i * d + a];
        const Bound inb = old[i * d + nb];
        // Cheapest way from i to b (resp. bar(a)) that uses a new edge.
        const Bound to_b = bound_min(bound_add(ia, w), bound_add(inb, loop_via_a));
        const Bound to_na = bound_min(bound_add(inb, w), bound_add(ia, loop_via_b));
        comparisons += 2;
        Bound* row_i = m + i * d;
        if (to_b.is_finite()) {
            relax_row(row_i, row_b, to_b, d);
            comparisons += d;
        }
        if (to_na.is_finite()) {
            relax_row(row_i, row_na, to_na, d);
            comparisons += d;
        }
    }
    count(stats, comparisons);
    for (std::size_t i = 0; i < d; ++i) {
        if (m[i * d + i] < Bound{0}) {
            return finish(std::move(out), false);
        }
    }
    count(stats, d);
    return finish(std::move(out), tighten_and_strengthen(m, d, stats));
}

} // namespace octobench
