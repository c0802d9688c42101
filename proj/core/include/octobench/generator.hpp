// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "octobench/constraint.hpp"
#include "octobench/domain.hpp"
#include "octobench/octagon.hpp"
#include "octobench/rng.hpp"
#include "octobench/zone.hpp"

namespace octobench {

struct IntRange {
    std::int64_t lo;
    std::int64_t hi;
};

struct GeneratorParams {
    std::size_t n = 25;
    double density = 0.5;
    std::uint64_t seed = 42;
    IntRange witness_range{-100, 100};
    IntRange slack_range{0, 50};
    DomainKind domain = DomainKind::Octagon;

    /// Throws std::invalid_argument on n == 0, density outside [0, 1],
    /// an empty range, or a negative slack.
    void validate() const;
};

/// floor(density * n(n-1)/2), with a 1e-9 guard against binary rounding of
/// decimal densities such as 0.7.
std::size_t target_related_pairs(std::size_t n, double density);

template <typename D>
struct Generated {
    D state;
    std::vector<std::int64_t> witness;
};

/// Witness-point construction. Draw order from Rng(seed):
///   1. witness w_k for k = 0..n-1 from witness_range;
///   2. for each k: slack s then s' (x_k <= w_k + s, x_k >= w_k - s');
///   3. partial Fisher-Yates over the lexicographic pair list picks
///      target_related_pairs(n, density) pairs;
///   4. for each picked pair {i, j}, one slack per relational form in the
///      order x_i + x_j, x_i - x_j, x_j - x_i, -x_i - x_j (octagon), or
///      x_i - x_j, x_j - x_i (zone).
/// The result is not closed; the witness satisfies every constraint.
Generated<Octagon> generate_octagon(const GeneratorParams& p);
Generated<ZoneDbm> generate_zone(const GeneratorParams& p);

template <typename D>
Generated<D> generate(const GeneratorParams& p);
template <>
inline Generated<Octagon> generate<Octagon>(const GeneratorParams& p) {
    return generate_octagon(p);
}
template <>
inline Generated<ZoneDbm> generate<ZoneDbm>(const GeneratorParams& p) {
    return generate_zone(p);
}

/// Two independent states from p.seed and seed2.
template <typename D>
std::pair<Generated<D>, Generated<D>> generate_pair(const GeneratorParams& p, std::uint64_t seed2) {
    GeneratorParams q = p;
    q.seed = seed2;
    return {generate<D>(p), generate<D>(q)};
}

/// A constraint strictly tighter than the closed state's current bound on
/// a uniformly sampled form, yet still satisfied by the witness. Falls back
/// to a no-op constraint after 64 failed draws.
Constraint sample_tightening_constraint(const Octagon& closed_state, Rng& rng, const std::vector<std::int64_t>& witness,
                                        const IntRange& slack_range = {0, 50});

/// Uniform random octagonal constraint over n variables with c drawn from
/// c_range. Unary kinds only when n == 1.
Constraint random_constraint(Rng& rng, std::size_t n, const IntRange& c_range);

} // namespace octobench
