// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "octobench/bound.hpp"
#include "octobench/constraint.hpp"

namespace octobench {

enum class ClosureState : std::uint8_t { Unknown, StronglyClosed };

/// Octagon over n integer variables, stored as a coherent 2n x 2n DBM.
///
/// Entry (i, j) bounds V_j - V_i, where V_{2k} = +x_k and V_{2k+1} = -x_k.
/// Bottom is a flag; the matrix of a bottom element carries no meaning.
class Octagon {
  public:
    /// Unconstrained element. Throws std::invalid_argument for n == 0.
    static Octagon top(std::size_t n);
    static Octagon bottom(std::size_t n);

    /// Builds an element from a row-major 2n x 2n matrix. The diagonal is
    /// forced to zero; coherence is the caller's responsibility.
    static Octagon from_matrix(std::size_t n, std::vector<Bound> entries,
                               ClosureState state = ClosureState::Unknown);

    [[nodiscard]] std::size_t num_vars() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return 2 * n_; }
    [[nodiscard]] bool is_bottom() const noexcept { return bottom_; }
    [[nodiscard]] bool is_closed() const noexcept { return closed_ == ClosureState::StronglyClosed; }
    [[nodiscard]] ClosureState closure_state() const noexcept { return closed_; }

    [[nodiscard]] Bound at(std::size_t i, std::size_t j) const noexcept { return m_[i * dim() + j]; }
    [[nodiscard]] Bound at(DbmIndex i, DbmIndex j) const noexcept { return at(i.raw(), j.raw()); }
    [[nodiscard]] std::span<const Bound> entries() const noexcept { return m_; }

    /// Raw matrix and flag equality, including bottom residue. Use equals()
    /// for the lattice notion.
    friend bool operator==(const Octagon&, const Octagon&) = default;

  private:
    friend struct OctagonAccess;

    Octagon(std::size_t n, std::vector<Bound> m, ClosureState closed, bool bottom)
        : n_(n), m_(std::move(m)), closed_(closed), bottom_(bottom) {}

    std::size_t n_;
    std::vector<Bound> m_;
    ClosureState closed_;
    bool bottom_;
};

/// Matrix position and encoded constant of a constraint. The coherent
/// mirror is (bar(col), bar(row)); for unary kinds the mirror is the entry itself.
struct EncodedEdge {
    std::size_t row;
    std::size_t col;
    Bound value;
};

/// Throws std::out_of_range if a variable id is >= n.
EncodedEdge encode(const Constraint& k, std::size_t n);

/// Comparison counter filled by the instrumented closure entry points.
struct ClosureStats {
    std::uint64_t comparisons = 0;
};

/// Lowers the designated entry and its mirror to min(existing, encoded c).
Octagon add_constraint(const Octagon& o, const Constraint& k);

/// Strong integer closure: Floyd-Warshall over every pivot, unary tightening,
/// then strengthening. Returns bottom on inconsistency.
Octagon close_full(const Octagon& o, ClosureStats* stats = nullptr);

/// Deliberately broken closures for mutation smoke tests.
enum class ClosureFault : std::uint8_t { None, SkipStrengthening };
/// close_full with the given fault injected; the result still claims closure.
Octagon close_full_faulty(const Octagon& o, ClosureFault fault);

/// Incremental strong closure restricted to the pivots touched by k.
/// Requires a strongly closed, non-bottom input (std::logic_error otherwise).
Octagon close_incremental_mine(const Octagon& o, const Constraint& k, ClosureStats* stats = nullptr);

/// Incremental strong closure as one quadratic pass over all entries,
/// enumerating the path shapes through the new edge and its mirror.
Octagon close_incremental_chawdhary(const Octagon& o, const Constraint& k, ClosureStats* stats = nullptr);

Octagon join(const Octagon& a, const Octagon& b);
Octagon meet(const Octagon& a, const Octagon& b);
Octagon widen(const Octagon& a, const Octagon& b);
Octagon forget(const Octagon& o, std::size_t var);

/// a includes b (b is below a). Both arguments should be closed.
bool includes(const Octagon& a, const Octagon& b);
bool equals(const Octagon& a, const Octagon& b);

struct Interval {
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;

    [[nodiscard]] bool contains(std::int64_t v) const noexcept {
        return (!lo || *lo <= v) && (!hi || v <= *hi);
    }
    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval interval_of(const Octagon& o, std::size_t var);

/// Fraction of unordered variable pairs related by at least one finite entry.
double achieved_density(const Octagon& o);
/// Number of unordered variable pairs related by at least one finite entry.
std::size_t related_pairs(const Octagon& o);

/// Exact translation x_var := x_var + delta. Preserves closure.
Octagon shift_variable(const Octagon& o, std::size_t var, std::int64_t delta);

/// True iff the integer point (length n) satisfies every finite entry.
bool satisfies(const Octagon& o, std::span<const std::int64_t> point);

// Structural predicates used by the check suite.
bool is_coherent(const Octagon& o);
bool has_zero_diagonal(const Octagon& o);
/// Triangle, tightness and strengthening inequalities. O(n^3).
bool is_strongly_closed(const Octagon& o);

} // namespace octobench
