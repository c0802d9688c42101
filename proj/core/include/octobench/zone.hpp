// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "octobench/bound.hpp"
#include "octobench/octagon.hpp"

namespace octobench {

/// Difference constraints x_i - x_j <= c over an (n+1) x (n+1) DBM.
/// Index 0 is the constant-zero variable; program variables are 1..n.
/// Entry (j, i) bounds x_i - x_j.
class ZoneDbm {
  public:
    static ZoneDbm top(std::size_t n);
    static ZoneDbm bottom(std::size_t n);

    [[nodiscard]] std::size_t num_vars() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return n_ + 1; }
    [[nodiscard]] bool is_bottom() const noexcept { return bottom_; }
    [[nodiscard]] bool is_closed() const noexcept { return closed_ == ClosureState::StronglyClosed; }
    [[nodiscard]] Bound at(std::size_t i, std::size_t j) const noexcept { return m_[i * dim() + j]; }
    [[nodiscard]] std::span<const Bound> entries() const noexcept { return m_; }

    friend bool operator==(const ZoneDbm&, const ZoneDbm&) = default;

  private:
    friend struct ZoneAccess;

    ZoneDbm(std::size_t n, std::vector<Bound> m, ClosureState closed, bool bottom)
        : n_(n), m_(std::move(m)), closed_(closed), bottom_(bottom) {}

    std::size_t n_;
    std::vector<Bound> m_;
    ClosureState closed_;
    bool bottom_;
};

inline ZoneDbm zone_top(std::size_t n) { return ZoneDbm::top(n); }

/// x_i - x_j <= c, with index 0 standing for the constant zero.
ZoneDbm zone_add_constraint(const ZoneDbm& z, std::size_t i, std::size_t j, std::int64_t c);
/// Shortest-path closure; bottom iff a negative diagonal appears.
ZoneDbm zone_close(const ZoneDbm& z);
ZoneDbm zone_join(const ZoneDbm& a, const ZoneDbm& b);
bool zone_includes(const ZoneDbm& a, const ZoneDbm& b);
bool zone_equals(const ZoneDbm& a, const ZoneDbm& b);

/// Interval of program variable v (1-based).
Interval zone_interval_of(const ZoneDbm& z, std::size_t v);
double zone_achieved_density(const ZoneDbm& z);
bool zone_satisfies(const ZoneDbm& z, std::span<const std::int64_t> point);
bool zone_has_zero_diagonal(const ZoneDbm& z);
/// Triangle inequality over all triples. O(n^3).
bool zone_is_closed(const ZoneDbm& z);

} // namespace octobench
