// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/constraint.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace octobench {

namespace detail {
void arithmetic_fault(const char* what, std::int64_t a, std::int64_t b) {
    std::fprintf(stderr, "octobench: internal arithmetic fault in %s(%lld, %lld): result leaves the headroom band\n",
                 what, static_cast<long long>(a), static_cast<long long>(b));
    std::abort();
}
} // namespace detail

std::string_view to_string(ConstraintKind k) noexcept {
    switch (k) {
    case ConstraintKind::DiffLE: return "diff";
    case ConstraintKind::SumLE: return "sum";
    case ConstraintKind::NegSumLE: return "neg-sum";
    case ConstraintKind::NegDiffLE: return "neg-diff";
    case ConstraintKind::UpperLE: return "upper";
    case ConstraintKind::LowerGE: return "lower";
    }
    return "?";
}

namespace {
Constraint make(ConstraintKind kind, std::size_t i, std::size_t j, std::int64_t c) {
    Constraint k{kind, i, j, Bound{c}};
    k.validate();
    return k;
}
} // namespace

Constraint Constraint::diff(std::size_t i, std::size_t j, std::int64_t c) { return make(ConstraintKind::DiffLE, i, j, c); }
Constraint Constraint::sum(std::size_t i, std::size_t j, std::int64_t c) { return make(ConstraintKind::SumLE, i, j, c); }
Constraint Constraint::neg_sum(std::size_t i, std::size_t j, std::int64_t c) {
    return make(ConstraintKind::NegSumLE, i, j, c);
}
Constraint Constraint::neg_diff(std::size_t i, std::size_t j, std::int64_t c) {
    return make(ConstraintKind::NegDiffLE, i, j, c);
}
Constraint Constraint::upper(std::size_t i, std::int64_t c) { return make(ConstraintKind::UpperLE, i, i, c); }
Constraint Constraint::lower(std::size_t i, std::int64_t c) { return make(ConstraintKind::LowerGE, i, i, c); }

void Constraint::validate() const {
    if (c.is_infinite()) {
        throw std::invalid_argument("constraint constant must be finite");
    }
    if (!is_unary(kind) && i == j) {
        throw std::invalid_argument("binary constraint over a single variable x" + std::to_string(i));
    }
}

std::int64_t Constraint::form_value(const std::int64_t* point) const noexcept {
    const std::int64_t xi = point[i];
    switch (kind) {
    case ConstraintKind::DiffLE: return xi - point[j];
    case ConstraintKind::SumLE: return xi + point[j];
    case ConstraintKind::NegSumLE: return -xi - point[j];
    case ConstraintKind::NegDiffLE: return point[j] - xi;
    case ConstraintKind::UpperLE: return xi;
    case ConstraintKind::LowerGE: return xi;
    }
    return 0;
}

bool Constraint::satisfied_by(const std::int64_t* point) const {
    const std::int64_t v = form_value(point);
    return kind == ConstraintKind::LowerGE ? v >= c.value() : v <= c.value();
}

std::string Constraint::to_string() const {
    const std::string xi = "x" + std::to_string(i);
    const std::string xj = "x" + std::to_string(j);
    const std::string cs = c.to_string();
    switch (kind) {
    case ConstraintKind::DiffLE: return xi + " - " + xj + " <= " + cs;
    case ConstraintKind::SumLE: return xi + " + " + xj + " <= " + cs;
    case ConstraintKind::NegSumLE: return "-" + xi + " - " + xj + " <= " + cs;
    case ConstraintKind::NegDiffLE: return xj + " - " + xi + " <= " + cs;
    case ConstraintKind::UpperLE: return xi + " <= " + cs;
    case ConstraintKind::LowerGE: return xi + " >= " + cs;
    }
    return {};
}

} // namespace octobench
