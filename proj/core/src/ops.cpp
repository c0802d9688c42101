// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/ops.hpp"

#include <stdexcept>
#include <string>

namespace octobench {

std::string_view to_string(OpId op) noexcept {
    switch (op) {
    case OpId::CloseFull: return "close-full";
    case OpId::IncMine: return "inc-mine";
    case OpId::IncChawdhary: return "inc-chawdhary";
    case OpId::Join: return "join";
    case OpId::Forget: return "forget";
    case OpId::Widen: return "widen";
    }
    return "?";
}

OpId parse_op(std::string_view name) {
    for (const OpId op : all_ops) {
        if (to_string(op) == name) {
            return op;
        }
    }
    throw std::invalid_argument("unknown op '" + std::string(name) +
                                "' (expected close-full, inc-mine, inc-chawdhary, join, forget or widen)");
}

} // namespace octobench
