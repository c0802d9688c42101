// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "octobench/octagon.hpp"
#include "octobench/zone.hpp"

namespace octobench {

enum class DomainKind : std::uint8_t { Octagon, Zone };

std::string_view to_string(DomainKind k) noexcept;
/// Accepts "octagon" and "zone"; throws std::invalid_argument otherwise.
DomainKind parse_domain_kind(std::string_view s);

/// Binding of a concrete domain type to the operations the generator,
/// harness and checks need. Specialize to plug in a new domain.
template <typename D>
struct DomainTraits;

template <>
struct DomainTraits<Octagon> {
    static constexpr DomainKind kind = DomainKind::Octagon;

    static Octagon top(std::size_t n) { return Octagon::top(n); }
    static Octagon close(const Octagon& o) { return close_full(o); }
    static Octagon join(const Octagon& a, const Octagon& b) { return octobench::join(a, b); }
    static bool includes(const Octagon& a, const Octagon& b) { return octobench::includes(a, b); }
    static bool equals(const Octagon& a, const Octagon& b) { return octobench::equals(a, b); }
    static bool is_bottom(const Octagon& o) { return o.is_bottom(); }
    static bool is_closed(const Octagon& o) { return o.is_closed(); }
    static std::size_t num_vars(const Octagon& o) { return o.num_vars(); }
    static std::span<const Bound> entries(const Octagon& o) { return o.entries(); }
    static bool satisfies(const Octagon& o, std::span<const std::int64_t> p) { return octobench::satisfies(o, p); }
    static bool coherent(const Octagon& o) { return is_coherent(o); }
    static bool zero_diagonal(const Octagon& o) { return has_zero_diagonal(o); }
    static bool canonical(const Octagon& o) { return is_strongly_closed(o); }
    static double density(const Octagon& o) { return achieved_density(o); }
};

template <>
struct DomainTraits<ZoneDbm> {
    static constexpr DomainKind kind = DomainKind::Zone;

    static ZoneDbm top(std::size_t n) { return ZoneDbm::top(n); }
    static ZoneDbm close(const ZoneDbm& z) { return zone_close(z); }
    static ZoneDbm join(const ZoneDbm& a, const ZoneDbm& b) { return zone_join(a, b); }
    static bool includes(const ZoneDbm& a, const ZoneDbm& b) { return zone_includes(a, b); }
    static bool equals(const ZoneDbm& a, const ZoneDbm& b) { return zone_equals(a, b); }
    static bool is_bottom(const ZoneDbm& z) { return z.is_bottom(); }
    static bool is_closed(const ZoneDbm& z) { return z.is_closed(); }
    static std::size_t num_vars(const ZoneDbm& z) { return z.num_vars(); }
    static std::span<const Bound> entries(const ZoneDbm& z) { return z.entries(); }
    static bool satisfies(const ZoneDbm& z, std::span<const std::int64_t> p) { return zone_satisfies(z, p); }
    static bool coherent(const ZoneDbm&) { return true; }
    static bool zero_diagonal(const ZoneDbm& z) { return zone_has_zero_diagonal(z); }
    static bool canonical(const ZoneDbm& z) { return zone_is_closed(z); }
    static double density(const ZoneDbm& z) { return zone_achieved_density(z); }
};

/// The contract every pluggable domain satisfies.
template <typename D>
concept AbstractDomain = std::copyable<D> && requires(const D& a, const D& b, std::size_t n,
                                                      std::span<const std::int64_t> point) {
    { DomainTraits<D>::kind } -> std::convertible_to<DomainKind>;
    { DomainTraits<D>::top(n) } -> std::same_as<D>;
    { DomainTraits<D>::close(a) } -> std::same_as<D>;
    { DomainTraits<D>::join(a, b) } -> std::same_as<D>;
    { DomainTraits<D>::includes(a, b) } -> std::same_as<bool>;
    { DomainTraits<D>::equals(a, b) } -> std::same_as<bool>;
    { DomainTraits<D>::is_bottom(a) } -> std::same_as<bool>;
    { DomainTraits<D>::is_closed(a) } -> std::same_as<bool>;
    { DomainTraits<D>::num_vars(a) } -> std::same_as<std::size_t>;
    { DomainTraits<D>::entries(a) } -> std::same_as<std::span<const Bound>>;
    { DomainTraits<D>::satisfies(a, point) } -> std::same_as<bool>;
    { DomainTraits<D>::coherent(a) } -> std::same_as<bool>;
    { DomainTraits<D>::zero_diagonal(a) } -> std::same_as<bool>;
    { DomainTraits<D>::canonical(a) } -> std::same_as<bool>;
    { DomainTraits<D>::density(a) } -> std::same_as<double>;
};

static_assert(AbstractDomain<Octagon>);
static_assert(AbstractDomain<ZoneDbm>);

} // namespace octobench
