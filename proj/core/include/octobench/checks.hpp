// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "octobench/constraint.hpp"
#include "octobench/domain.hpp"
#include "octobench/ops.hpp"

namespace octobench {

/// Identity of one benchmark grid cell, carried by every check report.
struct CellIdentity {
    OpId op{OpId::CloseFull};
    DomainKind domain{DomainKind::Octagon};
    std::size_t n{0};
    double density{0.0};
    std::uint64_t seed{0};

    friend bool operator==(const CellIdentity&, const CellIdentity&) = default;
};

enum class Verdict : std::uint8_t { Pass, Fail };
enum class Severity : std::uint8_t { Fatal };

struct CheckReport {
    std::string check;
    CellIdentity cell;
    Verdict verdict{Verdict::Pass};
    std::string detail; ///< first violation, seed and constraint on failure
};

/// Everything a check may inspect about one operation invocation.
template <typename D>
struct CheckContext {
    OpId op;
    CellIdentity cell;
    const D& input;
    const D* second = nullptr;             ///< right operand of join / widen
    std::optional<Constraint> constraint;  ///< added constraint of incremental closure
    std::optional<std::size_t> forgotten;  ///< variable removed by forget
    const D& output;
};

/// A predicate returns std::nullopt on success or a failure description.
template <typename D>
using CheckPredicate = std::function<std::optional<std::string>(const CheckContext<D>&)>;

template <typename D>
struct CheckSpec {
    std::string name;
    std::set<OpId> applies_to;
    CheckPredicate<D> predicate;
    Severity severity = Severity::Fatal;
    /// Expensive checks only run when CheckOptions::expensive is set.
    bool expensive = false;
};

class DuplicateCheckError : public std::invalid_argument {
  public:
    explicit DuplicateCheckError(const std::string& name)
        : std::invalid_argument("check '" + name + "' is already registered") {}
};

struct CheckOptions {
    bool expensive = false;
};

template <typename D>
class CheckRegistry {
  public:
    /// Registry holding the built-in checks for domain D.
    static CheckRegistry with_builtins();

    /// Throws DuplicateCheckError if the name is taken.
    void register_check(CheckSpec<D> spec);

    /// Evaluates every applicable check; never throws on a failing check.
    [[nodiscard]] std::vector<CheckReport> run_checks(const CheckContext<D>& ctx, const CheckOptions& options = {}) const;

    [[nodiscard]] std::size_t size() const noexcept { return specs_.size(); }
    [[nodiscard]] std::vector<std::string> names() const;

  private:
    std::vector<CheckSpec<D>> specs_;
};

extern template class CheckRegistry<Octagon>;
extern template class CheckRegistry<ZoneDbm>;

/// Identical pass/fail/failure bookkeeping for a cell.
struct CheckTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<CheckReport> failures;

    void add(const std::vector<CheckReport>& reports);
};

} // namespace octobench
