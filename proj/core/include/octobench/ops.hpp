// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "octobench/domain.hpp"

namespace octobench {

/// Benchmarkable operations, keyed by their command-line names.
enum class OpId : std::uint8_t { CloseFull, IncMine, IncChawdhary, Join, Forget, Widen };

inline constexpr std::array all_ops{OpId::CloseFull, OpId::IncMine, OpId::IncChawdhary,
                                    OpId::Join,      OpId::Forget,  OpId::Widen};

/// "close-full", "inc-mine", "inc-chawdhary", "join", "forget", "widen".
std::string_view to_string(OpId op) noexcept;
/// Throws std::invalid_argument for unknown names.
OpId parse_op(std::string_view name);

/// Zones only register full closure and join.
constexpr bool domain_supports(DomainKind domain, OpId op) noexcept {
    return domain == DomainKind::Octagon || op == OpId::CloseFull || op == OpId::Join;
}

constexpr bool is_closure_op(OpId op) noexcept {
    return op == OpId::CloseFull || op == OpId::IncMine || op == OpId::IncChawdhary;
}

} // namespace octobench
