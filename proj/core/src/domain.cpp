// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/domain.hpp"

#include <stdexcept>
#include <string>

namespace octobench {

std::string_view to_string(DomainKind k) noexcept {
    return k == DomainKind::Octagon ? "octagon" : "zone";
}

DomainKind parse_domain_kind(std::string_view s) {
    if (s == "octagon") {
        return DomainKind::Octagon;
    }
    if (s == "zone") {
        return DomainKind::Zone;
    }
    throw std::invalid_argument("unknown domain '" + std::string(s) + "' (expected octagon or zone)");
}

} // namespace octobench
