// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "octobench/octagon.hpp"

namespace octobench {

// Mutable view used by the operation implementations; not installed.
struct OctagonAccess {
    static Bound* data(Octagon& o) noexcept { return o.m_.data(); }
    static void set_closed(Octagon& o, ClosureState s) noexcept { o.closed_ = s; }
    static void set_bottom(Octagon& o) noexcept {
        o.bottom_ = true;
        o.closed_ = ClosureState::StronglyClosed;
    }
};

} // namespace octobench
