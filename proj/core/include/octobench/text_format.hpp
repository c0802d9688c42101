// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "octobench/octagon.hpp"
#include "octobench/zone.hpp"

namespace octobench {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

// Octagon text form:
//
//   oct n=<n>
//   x<i> <= <c>            one line per finite unary bound (then x<i> >= <c>)
//   x<i> - x<j> <= <c>     then, per pair i < j: x<i> - x<j>, x<j> - x<i>,
//   x<i> + x<j> <= <c>     x<i> + x<j>, -x<i> - x<j>
//   -x<i> - x<j> <= <c>
//
// or `bottom` as the only line after the header. Lines starting with '#'
// are comments. Unary entries are written as floor(entry / 2), which is
// exact for every generated or closed element.
std::string to_text(const Octagon& o);
Octagon octagon_from_text(std::string_view text);

// Zone text form: header `zone n=<n>`, variables x1..xn, lines
// `x<i> <= <c>`, `x<i> >= <c>` and `x<i> - x<j> <= <c>`.
std::string to_text(const ZoneDbm& z);
ZoneDbm zone_from_text(std::string_view text);

} // namespace octobench
