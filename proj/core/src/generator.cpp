// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/generator.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace octobench {

void GeneratorParams::validate() const {
    if (n == 0) {
        throw std::invalid_argument("generator needs n >= 1");
    }
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("density must lie in [0, 1], got " + std::to_string(density));
    }
    if (witness_range.lo > witness_range.hi) {
        throw std::invalid_argument("empty witness range");
    }
    if (slack_range.lo < 0 || slack_range.lo > slack_range.hi) {
        throw std::invalid_argument("slack range must be a non-empty interval of non-negative integers");
    }
}

std::size_t target_related_pairs(std::size_t n, double density) {
    const std::size_t pairs = n * (n - 1) / 2;
    const auto target = static_cast<std::size_t>(std::floor(density * static_cast<double>(pairs) + 1e-9));
    return target > pairs ? pairs : target;
}

namespace {

struct Skeleton {
    std::vector<std::int64_t> witness;
    std::vector<std::pair<std::int64_t, std::int64_t>> unary_slack;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Steps 1-3 of the draw order, shared by both domains.
Skeleton draw_skeleton(const GeneratorParams& p, Rng& rng) {
    p.validate();
    Skeleton s;
    s.witness.reserve(p.n);
    for (std::size_t k = 0; k < p.n; ++k) {
        s.witness.push_back(rng.uniform(p.witness_range.lo, p.witness_range.hi));
    }
    s.unary_slack.reserve(p.n);
    for (std::size_t k = 0; k < p.n; ++k) {
        const std::int64_t up = rng.uniform(p.slack_range.lo, p.slack_range.hi);
        const std::int64_t down = rng.uniform(p.slack_range.lo, p.slack_range.hi);
        s.unary_slack.emplace_back(up, down);
    }
    std::vector<std::pair<std::size_t, std::size_t>> all;
    all.reserve(p.n * (p.n - 1) / 2);
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t j = i + 1; j < p.n; ++j) {
            all.emplace_back(i, j);
        }
    }
    const std::size_t take = target_related_pairs(p.n, p.density);
    for (std::size_t t = 0; t < take; ++t) {
        const std::size_t r = t + rng.below(all.size() - t);
        std::swap(all[t], all[r]);
    }
    all.resize(take);
    s.pairs = std::move(all);
    return s;
}

} // namespace

Generated<Octagon> generate_octagon(const GeneratorParams& p) {
    Rng rng{p.seed};
    Skeleton s = draw_skeleton(p, rng);
    const auto slack = [&] { return rng.uniform(p.slack_range.lo, p.slack_range.hi); };
    const auto& w = s.witness;

    Octagon o = Octagon::top(p.n);
    for (std::size_t k = 0; k < p.n; ++k) {
        o = add_constraint(o, Constraint::upper(k, w[k] + s.unary_slack[k].first));
        o = add_constraint(o, Constraint::lower(k, w[k] - s.unary_slack[k].second));
    }
    for (const auto& [i, j] : s.pairs) {
        o = add_constraint(o, Constraint::sum(i, j, w[i] + w[j] + slack()));
        o = add_constraint(o, Constraint::diff(i, j, w[i] - w[j] + slack()));
        o = add_constraint(o, Constraint::diff(j, i, w[j] - w[i] + slack()));
        o = add_constraint(o, Constraint::neg_sum(i, j, -w[i] - w[j] + slack()));
    }
    return {std::move(o), std::move(s.witness)};
}

Generated<ZoneDbm> generate_zone(const GeneratorParams& p) {
    Rng rng{p.seed};
    Skeleton s = draw_skeleton(p, rng);
    const auto slack = [&] { return rng.uniform(p.slack_range.lo, p.slack_range.hi); };
    const auto& w = s.witness;

    // Zone variables are 1-based; witness[k] belongs to x_{k+1}.
    ZoneDbm z = ZoneDbm::top(p.n);
    for (std::size_t k = 0; k < p.n; ++k) {
        z = zone_add_constraint(z, k + 1, 0, w[k] + s.unary_slack[k].first);
        z = zone_add_constraint(z, 0, k + 1, -(w[k] - s.unary_slack[k].second));
    }
    for (const auto& [i, j] : s.pairs) {
        z = zone_add_constraint(z, i + 1, j + 1, w[i] - w[j] + slack());
        z = zone_add_constraint(z, j + 1, i + 1, w[j] - w[i] + slack());
    }
    return {std::move(z), std::move(s.witness)};
}

Constraint sample_tightening_constraint(const Octagon& closed_state, Rng& rng,
                                        const std::vector<std::int64_t>& witness, const IntRange& slack_range) {
    if (closed_state.is_bottom() || !closed_state.is_closed()) {
        throw std::logic_error("sample_tightening_constraint needs a strongly closed, non-bottom state");
    }
    const std::size_t n = closed_state.num_vars();
    if (witness.size() != n) {
        throw std::invalid_argument("witness dimension mismatch");
    }
    static constexpr std::array kinds{ConstraintKind::DiffLE, ConstraintKind::SumLE, ConstraintKind::NegSumLE,
                                      ConstraintKind::NegDiffLE, ConstraintKind::UpperLE, ConstraintKind::LowerGE};
    const std::int64_t median_slack = slack_range.lo + (slack_range.hi - slack_range.lo) / 2;
    Constraint last{};
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Unary kinds are the last two entries; n == 1 admits only those.
        const ConstraintKind kind = n == 1 ? kinds[4 + rng.below(2)] : kinds[rng.below(kinds.size())];
        Constraint k{kind, rng.below(n), 0, Bound{0}};
        if (!is_unary(kind)) {
            k.j = rng.below(n - 1);
            if (k.j >= k.i) {
                ++k.j;
            }
        } else {
            k.j = k.i;
        }
        const std::int64_t at_witness = k.form_value(witness.data());
        const EncodedEdge e = encode(k, n);
        const Bound entry = closed_state.at(e.row, e.col);

        if (kind == ConstraintKind::LowerGE) {
            // x >= c: current c is -entry/2; tighten upward but stay <= witness.
            if (entry.is_infinite()) {
                k.c = Bound{at_witness - median_slack};
                return k;
            }
            const std::int64_t current = -halve_floor(entry).value();
            k.c = Bound{current};
            last = k;
            const std::int64_t gap = at_witness - current;
            if (gap >= 1) {
                k.c = Bound{at_witness - gap / 2};
                return k;
            }
            continue;
        }
        if (entry.is_infinite()) {
            k.c = Bound{at_witness + median_slack};
            return k;
        }
        const std::int64_t current = kind == ConstraintKind::UpperLE ? halve_floor(entry).value() : entry.value();
        k.c = Bound{current};
        last = k;
        const std::int64_t gap = current - at_witness;
        if (gap >= 1) {
            k.c = Bound{at_witness + gap / 2};
            return k;
        }
    }
    return last;
}

Constraint random_constraint(Rng& rng, std::size_t n, const IntRange& c_range) {
    const std::size_t kinds = n == 1 ? 2 : 6;
    const std::size_t pick = rng.below(kinds);
    const std::size_t i = rng.below(n);
    std::size_t j = i;
    if (n > 1) {
        j = rng.below(n - 1);
        if (j >= i) {
            ++j;
        }
    }
    const std::int64_t c = rng.uniform(c_range.lo, c_range.hi);
    if (n == 1 || pick >= 4) {
        return (pick % 2 == 0) ? Constraint::upper(i, c) : Constraint::lower(i, c);
    }
    switch (pick) {
    case 0: return Constraint::diff(i, j, c);
    case 1: return Constraint::sum(i, j, c);
    case 2: return Constraint::neg_sum(i, j, c);
    default: return Constraint::neg_diff(i, j, c);
    }
}

} // namespace octobench
