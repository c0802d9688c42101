// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/octagon.hpp"

#include <gtest/gtest.h>

#include "octobench/generator.hpp"
#include "octobench/oracle.hpp"
#include "test_support.hpp"

using namespace octobench;
using octobench::testing::build;

namespace {
const Bound inf = Bound::infinity();

Octagon closed(std::size_t n, const std::vector<Constraint>& ks) { return close_full(build(n, ks)); }
} // namespace

TEST(OctagonTop, OneVariable) {
    const Octagon t = Octagon::top(1);
    ASSERT_EQ(t.dim(), 2U);
    EXPECT_EQ(t.at(0, 0), Bound{0});
    EXPECT_EQ(t.at(0, 1), inf);
    EXPECT_EQ(t.at(1, 0), inf);
    EXPECT_EQ(t.at(1, 1), Bound{0});
    EXPECT_TRUE(t.is_closed());
    EXPECT_FALSE(t.is_bottom());
}

TEST(OctagonTop, InvariantsHold) {
    const Octagon t = Octagon::top(3);
    EXPECT_TRUE(is_coherent(t));
    EXPECT_TRUE(has_zero_diagonal(t));
    EXPECT_TRUE(is_strongly_closed(t));
    for (std::size_t i = 0; i < t.dim(); ++i) {
        for (std::size_t j = 0; j < t.dim(); ++j) {
            EXPECT_EQ(t.at(i, j), i == j ? Bound{0} : inf);
        }
    }
}

TEST(OctagonTop, RejectsZeroVariables) { EXPECT_THROW((void)Octagon::top(0), std::invalid_argument); }

TEST(AddConstraint, UnaryUpperEncodesDoubled) {
    const Octagon o = add_constraint(Octagon::top(2), Constraint::upper(0, 3));
    EXPECT_EQ(o.at(1, 0), Bound{6});
    EXPECT_FALSE(o.is_closed());
}

TEST(AddConstraint, UnaryLowerEncodesNegatedDoubled) {
    const Octagon o = add_constraint(Octagon::top(2), Constraint::lower(1, 4));
    EXPECT_EQ(o.at(2, 3), Bound{-8});
}

TEST(AddConstraint, DiffWritesCoherentMirror) {
    const Octagon o = add_constraint(Octagon::top(2), Constraint::diff(0, 1, 1));
    EXPECT_EQ(o.at(2, 0), Bound{1});
    EXPECT_EQ(o.at(1, 3), Bound{1});
    EXPECT_TRUE(is_coherent(o));
}

TEST(AddConstraint, SumAndNegSumPositions) {
    const Octagon s = add_constraint(Octagon::top(2), Constraint::sum(0, 1, 7));
    EXPECT_EQ(s.at(3, 0), Bound{7});
    EXPECT_EQ(s.at(1, 2), Bound{7});
    const Octagon ns = add_constraint(Octagon::top(2), Constraint::neg_sum(0, 1, -2));
    EXPECT_EQ(ns.at(2, 1), Bound{-2});
    EXPECT_EQ(ns.at(0, 3), Bound{-2});
}

TEST(AddConstraint, NegDiffIsDiffReversed) {
    EXPECT_EQ(add_constraint(Octagon::top(3), Constraint::neg_diff(0, 2, 5)),
              add_constraint(Octagon::top(3), Constraint::diff(2, 0, 5)));
}

TEST(AddConstraint, WeakerConstraintKeepsEntryAndClosure) {
    const Octagon a = close_full(add_constraint(Octagon::top(2), Constraint::upper(0, 3)));
    const Octagon b = add_constraint(a, Constraint::upper(0, 5));
    EXPECT_EQ(b.at(1, 0), Bound{6});
    EXPECT_TRUE(b.is_closed());
    EXPECT_EQ(a, b);
}

TEST(AddConstraint, RejectsOutOfRangeVariable) {
    EXPECT_THROW((void)add_constraint(Octagon::top(2), Constraint::upper(2, 0)), std::out_of_range);
    EXPECT_THROW((void)add_constraint(Octagon::top(2), Constraint::diff(0, 3, 0)), std::out_of_range);
}

TEST(Join, Idempotent) {
    const Octagon a = closed(2, {Constraint::upper(0, 2), Constraint::diff(0, 1, 1)});
    EXPECT_EQ(join(a, a), a);
}

TEST(Join, BottomIsLeast) {
    const Octagon b = closed(2, {Constraint::upper(0, 2)});
    EXPECT_EQ(join(Octagon::bottom(2), b), b);
    EXPECT_EQ(join(b, Octagon::bottom(2)), b);
}

TEST(Join, IntervalHull) {
    const Octagon a = closed(1, {Constraint::upper(0, 2)});
    const Octagon b = closed(1, {Constraint::upper(0, 5)});
    EXPECT_EQ(join(a, b), b);
}

TEST(Join, MatchesHullOracle) {
    // Smallest octagon containing both point sets, computed by enumeration.
    const Octagon a = closed(2, {Constraint::upper(0, 2), Constraint::lower(0, 0), Constraint::upper(1, 1),
                                 Constraint::lower(1, 1)});
    const Octagon b = closed(2, {Constraint::upper(0, 5), Constraint::lower(0, 4), Constraint::upper(1, 3),
                                 Constraint::lower(1, 2)});
    const auto in_union = [&](std::span<const std::int64_t> p) {
        return oracle::member(a, p) || oracle::member(b, p);
    };
    const Octagon hull = oracle::to_octagon(oracle::tight_bounds(2, in_union, 12));
    EXPECT_EQ(join(a, b).entries().size(), hull.entries().size());
    EXPECT_TRUE(std::equal(hull.entries().begin(), hull.entries().end(), join(a, b).entries().begin()));
}

TEST(Join, DimensionMismatch) { EXPECT_THROW((void)join(Octagon::top(2), Octagon::top(3)), std::invalid_argument); }

TEST(Meet, TopIsNeutral) {
    const Octagon a = closed(2, {Constraint::sum(0, 1, 4)});
    EXPECT_TRUE(equals(close_full(meet(a, Octagon::top(2))), a));
    EXPECT_TRUE(equals(close_full(meet(a, a)), a));
}

TEST(Meet, EmptyBoxClosesToBottom) {
    const Octagon a = closed(1, {Constraint::upper(0, 2)});
    const Octagon b = closed(1, {Constraint::lower(0, 5)});
    const Octagon m = meet(a, b);
    EXPECT_FALSE(m.is_closed());
    EXPECT_TRUE(close_full(m).is_bottom());
}

TEST(Meet, BottomAbsorbs) { EXPECT_TRUE(meet(Octagon::bottom(2), Octagon::top(2)).is_bottom()); }

TEST(Widen, StableOnEqualArguments) {
    const Octagon a = closed(2, {Constraint::upper(0, 2), Constraint::diff(0, 1, 3)});
    EXPECT_EQ(widen(a, a), a);
}

TEST(Widen, GrowingBoundEscalates) {
    const Octagon a = closed(1, {Constraint::upper(0, 2)});
    const Octagon b = closed(1, {Constraint::upper(0, 3)});
    EXPECT_EQ(widen(a, b).at(1, 0), inf);
}

TEST(Widen, BottomLeftYieldsRight) {
    const Octagon b = closed(1, {Constraint::upper(0, 3)});
    EXPECT_EQ(widen(Octagon::bottom(1), b), b);
}

TEST(Widen, RandomAscendingChainsStabilize) {
    Rng rng{2024};
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.below(3);
        Octagon current = closed(n, octobench::testing::random_constraints(rng, n, 3 * n, 0, 8));
        if (current.is_bottom()) {
            continue;
        }
        std::size_t finite = 0;
        for (const Bound b : current.entries()) {
            finite += b.is_finite() ? 1 : 0;
        }
        std::size_t steps = 0;
        for (;;) {
            // Loosen a random subset of constraints to produce the next element.
            std::vector<Constraint> grown;
            for (std::size_t k = 0; k < 2 * n; ++k) {
                grown.push_back(octobench::testing::random_constraint(rng, n, 0, 40));
            }
            const Octagon next = join(current, closed(n, grown).is_bottom() ? current : closed(n, grown));
            const Octagon widened = widen(current, next);
            ++steps;
            if (widened == current) {
                break;
            }
            current = widened;
            ASSERT_LE(steps, finite + 1);
        }
        EXPECT_LE(steps, finite + 1);
    }
}

TEST(Forget, TopStaysTop) { EXPECT_EQ(forget(Octagon::top(2), 0), Octagon::top(2)); }

TEST(Forget, RetainsImpliedBoundsOfOthers) {
    const Octagon c = closed(2, {Constraint::upper(0, 2), Constraint::upper(1, 3), Constraint::sum(0, 1, 4)});
    const Octagon f = forget(c, 0);
    EXPECT_EQ(f, closed(2, {Constraint::upper(1, 3)}));
    EXPECT_EQ(forget(f, 0), f);
}

TEST(Forget, RejectsNonClosedInput) {
    EXPECT_THROW((void)forget(add_constraint(Octagon::top(2), Constraint::upper(0, 1)), 0), std::logic_error);
    EXPECT_THROW((void)forget(Octagon::top(2), 2), std::out_of_range);
}

TEST(Forget, MatchesProjectionOracle) {
    Rng rng{99};
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.below(2);
        const auto ks = octobench::testing::random_constraints(rng, n, 2 * n + 1, -8, 8);
        const Octagon c = closed(n, ks);
        if (c.is_bottom()) {
            continue;
        }
        const std::size_t v = rng.below(n);
        const Octagon f = forget(c, v);
        // Projection: some value of x_v within a generous window puts the point in c.
        const auto projected = [&](std::span<const std::int64_t> p) {
            std::vector<std::int64_t> q(p.begin(), p.end());
            for (std::int64_t x = -80; x <= 80; ++x) {
                q[v] = x;
                if (oracle::member(c, q)) {
                    return true;
                }
            }
            return false;
        };
        const auto in_forgotten = [&](std::span<const std::int64_t> p) { return oracle::member(f, p); };
        oracle::for_each_point(n, 10, [&](std::span<const std::int64_t> p) {
            ASSERT_EQ(projected(p), in_forgotten(p)) << "trial " << trial;
        });
        ++checked;
    }
    EXPECT_GT(checked, 20);
}

TEST(Includes, TopIncludesEverything) {
    EXPECT_TRUE(includes(Octagon::top(2), closed(2, {Constraint::upper(0, 1)})));
    EXPECT_TRUE(includes(Octagon::top(2), Octagon::bottom(2)));
}

TEST(Includes, IntervalContainment) {
    const Octagon a = closed(1, {Constraint::upper(0, 2)});
    const Octagon b = closed(1, {Constraint::upper(0, 3)});
    EXPECT_FALSE(includes(a, b));
    EXPECT_TRUE(includes(b, a));
}

TEST(Includes, AgreesWithSubsetOracle) {
    Rng rng{5150};
    for (int t = 0; t < 200; ++t) {
        const Octagon a = closed(3, octobench::testing::random_constraints(rng, 3, 4, -8, 8));
        const Octagon b = closed(3, octobench::testing::random_constraints(rng, 3, 4, -8, 8));
        EXPECT_EQ(includes(a, b), oracle::subset_points(b, a, 20)) << "trial " << t;
    }
}

TEST(Equals, ReflexiveAndBottoms) {
    const Octagon a = closed(2, {Constraint::diff(0, 1, 1)});
    EXPECT_TRUE(equals(a, a));
    const Octagon b1 = close_full(build(1, {Constraint::upper(0, 0), Constraint::lower(0, 1)}));
    const Octagon b2 = close_full(build(1, {Constraint::upper(0, 5), Constraint::lower(0, 9)}));
    ASSERT_TRUE(b1.is_bottom());
    ASSERT_TRUE(b2.is_bottom());
    EXPECT_TRUE(equals(b1, b2));
}

TEST(Equals, RedundantConstraintSameClosure) {
    const std::vector<Constraint> base{Constraint::diff(0, 1, 1), Constraint::diff(1, 2, 2)};
    std::vector<Constraint> redundant = base;
    redundant.push_back(Constraint::diff(0, 2, 3));
    EXPECT_NE(build(3, base), build(3, redundant));
    EXPECT_TRUE(equals(closed(3, base), closed(3, redundant)));
}

TEST(IntervalOf, TopIsUnbounded) {
    const Interval iv = interval_of(Octagon::top(2), 1);
    EXPECT_FALSE(iv.lo.has_value());
    EXPECT_FALSE(iv.hi.has_value());
}

TEST(IntervalOf, DirectDecoding) {
    const Interval iv = interval_of(closed(1, {Constraint::upper(0, 3), Constraint::lower(0, 1)}), 0);
    EXPECT_EQ(iv.lo, std::optional<std::int64_t>{1});
    EXPECT_EQ(iv.hi, std::optional<std::int64_t>{3});
}

TEST(IntervalOf, PropagatedUpperBound) {
    const Interval iv = interval_of(closed(2, {Constraint::diff(0, 1, 0), Constraint::upper(1, 2)}), 0);
    EXPECT_EQ(iv.hi, std::optional<std::int64_t>{2});
    EXPECT_FALSE(iv.lo.has_value());
}

TEST(AchievedDensity, Examples) {
    EXPECT_DOUBLE_EQ(achieved_density(Octagon::top(25)), 0.0);
    EXPECT_DOUBLE_EQ(achieved_density(add_constraint(Octagon::top(25), Constraint::sum(3, 17, 1))), 1.0 / 300.0);
    EXPECT_DOUBLE_EQ(achieved_density(Octagon::top(1)), 0.0);
    GeneratorParams p;
    p.n = 10;
    p.density = 0.5;
    EXPECT_DOUBLE_EQ(achieved_density(generate_octagon(p).state), 22.0 / 45.0);
}

TEST(ShiftVariable, TranslatesPointSet) {
    const Octagon c = closed(2, {Constraint::upper(0, 2), Constraint::lower(0, -1), Constraint::diff(1, 0, 3),
                                 Constraint::lower(1, 0)});
    const Octagon s = shift_variable(c, 0, 5);
    EXPECT_TRUE(s.is_closed());
    EXPECT_TRUE(is_strongly_closed(s));
    oracle::for_each_point(2, 12, [&](std::span<const std::int64_t> p) {
        std::vector<std::int64_t> q(p.begin(), p.end());
        q[0] -= 5;
        ASSERT_EQ(oracle::member(s, p), oracle::member(c, q));
    });
}
