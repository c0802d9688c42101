// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/checks.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace octobench {

namespace {

template <typename D>
std::string describe(const CheckContext<D>& ctx) {
    std::ostringstream os;
    os << "seed=" << ctx.cell.seed << " n=" << ctx.cell.n << " density=" << ctx.cell.density;
    if (ctx.constraint) {
        os << " constraint='" << ctx.constraint->to_string() << "'";
    }
    if (ctx.forgotten) {
        os << " var=x" << *ctx.forgotten;
    }
    return os.str();
}

template <typename D>
std::string entry_detail(const CheckContext<D>& ctx, const char* what, std::size_t flat, std::size_t dim,
                         const std::string& extra = {}) {
    std::ostringstream os;
    os << what << " at (" << flat / dim << ", " << flat % dim << ")" << extra << "; " << describe(ctx);
    return os.str();
}

template <typename D>
std::size_t matrix_dim(const D& d) {
    std::size_t dim = 0;
    while (dim * dim < DomainTraits<D>::entries(d).size()) {
        ++dim;
    }
    return dim;
}

/// Input the closure output must be below: the operand with the new
/// constraint applied, for incremental ops.
template <typename D>
D closure_reference_input(const CheckContext<D>& ctx) {
    if constexpr (std::is_same_v<D, Octagon>) {
        if (ctx.constraint) {
            return add_constraint(ctx.input, *ctx.constraint);
        }
    }
    return ctx.input;
}

template <typename D>
std::vector<CheckSpec<D>> builtin_specs() {
    using T = DomainTraits<D>;
    const std::set<OpId> every(all_ops.begin(), all_ops.end());
    const std::set<OpId> closures{OpId::CloseFull, OpId::IncMine, OpId::IncChawdhary};
    std::vector<CheckSpec<D>> specs;

    specs.push_back({"coherent", every, [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                         if (T::is_bottom(ctx.output) || T::coherent(ctx.output)) {
                             return std::nullopt;
                         }
                         return "output violates m[i][j] = m[bar(j)][bar(i)]; " + describe(ctx);
                     }});

    specs.push_back({"zero-diagonal", every, [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                         if (T::is_bottom(ctx.output) || T::zero_diagonal(ctx.output)) {
                             return std::nullopt;
                         }
                         const auto e = T::entries(ctx.output);
                         const std::size_t dim = matrix_dim(ctx.output);
                         for (std::size_t i = 0; i < dim; ++i) {
                             if (e[i * dim + i] != Bound{0}) {
                                 return entry_detail(ctx, "non-zero diagonal", i * dim + i, dim);
                             }
                         }
                         return "non-zero diagonal; " + describe(ctx);
                     }});

    specs.push_back({"not-bottom", every, [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                         const bool inputs_consistent =
                             !T::is_bottom(ctx.input) && (ctx.second == nullptr || !T::is_bottom(*ctx.second));
                         if (inputs_consistent && T::is_bottom(ctx.output)) {
                             return "consistent generator input produced bottom; " + describe(ctx);
                         }
                         return std::nullopt;
                     }});

    specs.push_back({"closure-tightens", closures, [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                         if (T::is_bottom(ctx.output)) {
                             return std::nullopt;
                         }
                         const D reference = closure_reference_input(ctx);
                         const auto in = T::entries(reference);
                         const auto out = T::entries(ctx.output);
                         for (std::size_t i = 0; i < in.size(); ++i) {
                             if (in[i] < out[i]) {
                                 return entry_detail(ctx, "closure increased an entry", i, matrix_dim(ctx.output),
                                                     " (" + in[i].to_string() + " -> " + out[i].to_string() + ")");
                             }
                         }
                         return std::nullopt;
                     }});

    specs.push_back({"closure-idempotent", closures, [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                         const D again = T::close(ctx.output);
                         if (T::equals(again, ctx.output)) {
                             return std::nullopt;
                         }
                         const auto a = T::entries(again);
                         const auto b = T::entries(ctx.output);
                         for (std::size_t i = 0; i < a.size(); ++i) {
                             if (a[i] != b[i]) {
                                 return entry_detail(ctx, "re-closing changed an entry", i, matrix_dim(ctx.output),
                                                     " (" + b[i].to_string() + " -> " + a[i].to_string() + ")");
                             }
                         }
                         return "re-closing changed the bottom verdict; " + describe(ctx);
                     }});

    specs.push_back({"closure-canonical", {OpId::CloseFull, OpId::IncMine, OpId::IncChawdhary, OpId::Join,
                                           OpId::Forget},
                     [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                         if (T::canonical(ctx.output)) {
                             return std::nullopt;
                         }
                         return "triangle, tightness or strengthening inequality violated; " + describe(ctx);
                     }});

    if constexpr (std::is_same_v<D, Octagon>) {
        specs.push_back({"incremental-matches-full",
                         {OpId::IncMine, OpId::IncChawdhary},
                         [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                             if (!ctx.constraint) {
                                 return "incremental cell without a constraint; " + describe(ctx);
                             }
                             const Octagon full = close_full(add_constraint(ctx.input, *ctx.constraint));
                             if (full == ctx.output || (full.is_bottom() && ctx.output.is_bottom())) {
                                 return std::nullopt;
                             }
                             if (full.is_bottom() != ctx.output.is_bottom()) {
                                 return "bottom verdict differs from full closure; " + describe(ctx);
                             }
                             const auto a = full.entries();
                             const auto b = ctx.output.entries();
                             for (std::size_t i = 0; i < a.size(); ++i) {
                                 if (a[i] != b[i]) {
                                     return entry_detail(ctx, "differs from full closure", i, full.dim(),
                                                         " (" + b[i].to_string() + " vs " + a[i].to_string() + ")");
                                 }
                             }
                             return "closure flag differs from full closure; " + describe(ctx);
                         },
                         Severity::Fatal, true});
    }

    specs.push_back({"join-upper-bound", {OpId::Join}, [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                         if (ctx.second == nullptr) {
                             return "join cell without a second operand; " + describe(ctx);
                         }
                         if (T::includes(ctx.output, ctx.input) && T::includes(ctx.output, *ctx.second)) {
                             return std::nullopt;
                         }
                         return "join result does not include both operands; " + describe(ctx);
                     }});

    if constexpr (std::is_same_v<D, Octagon>) {
        specs.push_back({"forget-clears-var", {OpId::Forget},
                         [](const CheckContext<D>& ctx) -> std::optional<std::string> {
                             if (!ctx.forgotten || ctx.output.is_bottom()) {
                                 return std::nullopt;
                             }
                             const std::size_t d = ctx.output.dim();
                             for (const std::size_t v : {2 * *ctx.forgotten, 2 * *ctx.forgotten + 1}) {
                                 for (std::size_t k = 0; k < d; ++k) {
                                     if (k == v) {
                                         continue;
                                     }
                                     if (ctx.output.at(v, k).is_finite()) {
                                         return entry_detail(ctx, "finite entry survived forget", v * d + k, d);
                                     }
                                     if (ctx.output.at(k, v).is_finite()) {
                                         return entry_detail(ctx, "finite entry survived forget", k * d + v, d);
                                     }
                                 }
                             }
                             return std::nullopt;
                         }});
    }
    return specs;
}

} // namespace

template <typename D>
CheckRegistry<D> CheckRegistry<D>::with_builtins() {
    CheckRegistry<D> r;
    for (auto& spec : builtin_specs<D>()) {
        r.register_check(std::move(spec));
    }
    return r;
}

template <typename D>
void CheckRegistry<D>::register_check(CheckSpec<D> spec) {
    const bool taken = std::any_of(specs_.begin(), specs_.end(), [&](const auto& s) { return s.name == spec.name; });
    if (taken) {
        throw DuplicateCheckError(spec.name);
    }
    specs_.push_back(std::move(spec));
}

template <typename D>
std::vector<CheckReport> CheckRegistry<D>::run_checks(const CheckContext<D>& ctx, const CheckOptions& options) const {
    std::vector<CheckReport> out;
    for (const auto& spec : specs_) {
        if (!spec.applies_to.contains(ctx.op) || (spec.expensive && !options.expensive)) {
            continue;
        }
        std::optional<std::string> failure = spec.predicate(ctx);
        CheckReport report{spec.name, ctx.cell, failure ? Verdict::Fail : Verdict::Pass, failure.value_or("")};
        out.push_back(std::move(report));
    }
    return out;
}

template <typename D>
std::vector<std::string> CheckRegistry<D>::names() const {
    std::vector<std::string> out;
    out.reserve(specs_.size());
    for (const auto& s : specs_) {
        out.push_back(s.name);
    }
    return out;
}

template class CheckRegistry<Octagon>;
template class CheckRegistry<ZoneDbm>;

void CheckTally::add(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Pass) {
            ++passed;
        } else {
            ++failed;
            failures.push_back(r);
        }
    }
}

} // namespace octobench
