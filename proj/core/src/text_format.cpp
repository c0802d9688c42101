// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/text_format.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace octobench {

namespace {

struct Token {
    enum class Kind { Var, Int, Plus, Minus, Le, Ge } kind;
    std::int64_t value = 0;
    std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t pos = 0;
    const auto error = [&](const std::string& what) { throw ParseError(line_no, pos + 1, what); };
    const auto read_number = [&](std::size_t start) {
        std::int64_t value = 0;
        const auto* first = line.data() + start;
        const auto* last = line.data() + line.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            error("expected a number");
        }
        pos = static_cast<std::size_t>(ptr - line.data());
        return value;
    };
    while (pos < line.size()) {
        const char c = line[pos];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++pos;
            continue;
        }
        const std::size_t column = pos + 1;
        if (c == 'x') {
            ++pos;
            if (pos >= line.size() || std::isdigit(static_cast<unsigned char>(line[pos])) == 0) {
                error("expected a variable index after 'x'");
            }
            out.push_back({Token::Kind::Var, read_number(pos), column});
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            out.push_back({Token::Kind::Int, read_number(pos), column});
        } else if (c == '+') {
            out.push_back({Token::Kind::Plus, 0, column});
            ++pos;
        } else if (c == '-') {
            out.push_back({Token::Kind::Minus, 0, column});
            ++pos;
        } else if ((c == '<' || c == '>') && pos + 1 < line.size() && line[pos + 1] == '=') {
            out.push_back({c == '<' ? Token::Kind::Le : Token::Kind::Ge, 0, column});
            pos += 2;
        } else {
            error(std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

/// A parsed line `[-] x<i> [(+|-) x<j>] (<=|>=) [-]<c>`.
struct RawLine {
    bool neg_first = false;
    std::size_t i = 0;
    std::optional<std::pair<bool, std::size_t>> second; // (is_minus, j)
    bool ge = false;
    std::int64_t c = 0;
};

RawLine parse_line(std::string_view line, std::size_t line_no) {
    const std::vector<Token> toks = tokenize(line, line_no);
    std::size_t t = 0;
    const auto fail = [&](const std::string& what) -> RawLine {
        const std::size_t column = t < toks.size() ? toks[t].column : line.size() + 1;
        throw ParseError(line_no, column, what);
    };
    const auto at = [&](Token::Kind k) { return t < toks.size() && toks[t].kind == k; };
    RawLine r;
    if (at(Token::Kind::Minus)) {
        r.neg_first = true;
        ++t;
    }
    if (!at(Token::Kind::Var)) {
        return fail("expected a variable");
    }
    r.i = static_cast<std::size_t>(toks[t++].value);
    if (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
        const bool minus = toks[t++].kind == Token::Kind::Minus;
        if (!at(Token::Kind::Var)) {
            return fail("expected a variable");
        }
        r.second = std::pair{minus, static_cast<std::size_t>(toks[t++].value)};
    }
    if (at(Token::Kind::Le) || at(Token::Kind::Ge)) {
        r.ge = toks[t++].kind == Token::Kind::Ge;
    } else {
        return fail("expected '<=' or '>='");
    }
    bool negative = false;
    if (at(Token::Kind::Minus)) {
        negative = true;
        ++t;
    }
    if (!at(Token::Kind::Int)) {
        return fail("expected an integer constant");
    }
    r.c = negative ? -toks[t++].value : toks[t++].value;
    if (t != toks.size()) {
        return fail("trailing input");
    }
    return r;
}

struct Header {
    std::size_t n = 0;
};

template <typename Body>
void for_each_content_line(std::string_view text, std::string_view keyword, Header& header, Body&& body) {
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())) != 0) {
            line.remove_suffix(1);
        }
        std::size_t lead = 0;
        while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead])) != 0) {
            ++lead;
        }
        line.remove_prefix(lead);
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        if (!have_header) {
            const std::string prefix = std::string(keyword) + " n=";
            if (line.substr(0, prefix.size()) != prefix) {
                throw ParseError(line_no, 1, "expected header '" + prefix + "<n>'");
            }
            std::size_t n = 0;
            const auto digits = line.substr(prefix.size());
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0) {
                throw ParseError(line_no, prefix.size() + 1, "invalid dimension");
            }
            header.n = n;
            have_header = true;
        } else {
            body(line, line_no);
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!have_header) {
        throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing '" + std::string(keyword) + " n=<n>' header");
    }
}

} // namespace

std::string to_text(const Octagon& o) {
    std::ostringstream out;
    const std::size_t n = o.num_vars();
    out << "oct n=" << n << '\n';
    if (o.is_bottom()) {
        out << "bottom\n";
        return out.str();
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Bound upper2 = o.at(2 * i + 1, 2 * i);
        const Bound lower2 = o.at(2 * i, 2 * i + 1);
        if (upper2.is_finite()) {
            out << 'x' << i << " <= " << halve_floor(upper2).value() << '\n';
        }
        if (lower2.is_finite()) {
            out << 'x' << i << " >= " << -halve_floor(lower2).value() << '\n';
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Bound diff_ij = o.at(2 * j, 2 * i);
            const Bound diff_ji = o.at(2 * i, 2 * j);
            const Bound sum = o.at(2 * j + 1, 2 * i);
            const Bound neg_sum = o.at(2 * j, 2 * i + 1);
            if (diff_ij.is_finite()) {
                out << 'x' << i << " - x" << j << " <= " << diff_ij.value() << '\n';
            }
            if (diff_ji.is_finite()) {
                out << 'x' << j << " - x" << i << " <= " << diff_ji.value() << '\n';
            }
            if (sum.is_finite()) {
                out << 'x' << i << " + x" << j << " <= " << sum.value() << '\n';
            }
            if (neg_sum.is_finite()) {
                out << "-x" << i << " - x" << j << " <= " << neg_sum.value() << '\n';
            }
        }
    }
    return out.str();
}

Octagon octagon_from_text(std::string_view text) {
    Header header;
    std::vector<std::pair<Constraint, std::size_t>> constraints;
    bool bottom = false;
    for_each_content_line(text, "oct", header, [&](std::string_view line, std::size_t line_no) {
        if (line == "bottom") {
            bottom = true;
            return;
        }
        const RawLine r = parse_line(line, line_no);
        Constraint k;
        if (!r.second) {
            if (r.neg_first) {
                throw ParseError(line_no, 1, "unary bounds are written as 'x<i> <= c' or 'x<i> >= c'");
            }
            k = r.ge ? Constraint::lower(r.i, r.c) : Constraint::upper(r.i, r.c);
        } else {
            const auto [minus, j] = *r.second;
            if (r.ge) {
                throw ParseError(line_no, 1, "relational constraints use '<='");
            }
            if (r.i == j) {
                throw ParseError(line_no, 1, "relational constraint over a single variable");
            }
            if (!r.neg_first && minus) {
                k = Constraint::diff(r.i, j, r.c);
            } else if (!r.neg_first && !minus) {
                k = Constraint::sum(r.i, j, r.c);
            } else if (r.neg_first && minus) {
                k = Constraint::neg_sum(r.i, j, r.c);
            } else {
                k = Constraint::diff(j, r.i, r.c); // -x_i + x_j
            }
        }
        constraints.emplace_back(k, line_no);
    });
    if (bottom) {
        if (!constraints.empty()) {
            throw ParseError(constraints.front().second, 1, "'bottom' must be the only line after the header");
        }
        return Octagon::bottom(header.n);
    }
    Octagon o = Octagon::top(header.n);
    for (const auto& [k, line_no] : constraints) {
        if (k.max_var() >= header.n) {
            throw ParseError(line_no, 1, "variable out of range for n=" + std::to_string(header.n));
        }
        o = add_constraint(o, k);
    }
    return o;
}

std::string to_text(const ZoneDbm& z) {
    std::ostringstream out;
    const std::size_t n = z.num_vars();
    out << "zone n=" << n << '\n';
    if (z.is_bottom()) {
        out << "bottom\n";
        return out.str();
    }
    for (std::size_t i = 1; i <= n; ++i) {
        if (z.at(0, i).is_finite()) {
            out << 'x' << i << " <= " << z.at(0, i).value() << '\n';
        }
        if (z.at(i, 0).is_finite()) {
            out << 'x' << i << " >= " << -z.at(i, 0).value() << '\n';
        }
    }
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (z.at(j, i).is_finite()) {
                out << 'x' << i << " - x" << j << " <= " << z.at(j, i).value() << '\n';
            }
            if (z.at(i, j).is_finite()) {
                out << 'x' << j << " - x" << i << " <= " << z.at(i, j).value() << '\n';
            }
        }
    }
    return out.str();
}

ZoneDbm zone_from_text(std::string_view text) {
    Header header;
    struct Line {
        std::size_t i, j;
        std::int64_t c;
        std::size_t line_no;
    };
    std::vector<Line> lines;
    bool bottom = false;
    for_each_content_line(text, "zone", header, [&](std::string_view line, std::size_t line_no) {
        if (line == "bottom") {
            bottom = true;
            return;
        }
        const RawLine r = parse_line(line, line_no);
        if (r.neg_first || r.i == 0) {
            throw ParseError(line_no, 1, "zone lines are 'x<i> <= c', 'x<i> >= c' or 'x<i> - x<j> <= c' with i >= 1");
        }
        if (!r.second) {
            // x_i <= c is x_i - x_0 <= c; x_i >= c is x_0 - x_i <= -c.
            lines.push_back(r.ge ? Line{0, r.i, -r.c, line_no} : Line{r.i, 0, r.c, line_no});
            return;
        }
        const auto [minus, j] = *r.second;
        if (!minus || r.ge || j == 0) {
            throw ParseError(line_no, 1, "zones only express 'x<i> - x<j> <= c'");
        }
        lines.push_back({r.i, j, r.c, line_no});
    });
    if (bottom) {
        if (!lines.empty()) {
            throw ParseError(lines.front().line_no, 1, "'bottom' must be the only line after the header");
        }
        return ZoneDbm::bottom(header.n);
    }
    ZoneDbm z = ZoneDbm::top(header.n);
    for (const Line& l : lines) {
        if (l.i > header.n || l.j > header.n || l.i == l.j) {
            throw ParseError(l.line_no, 1, "variable out of range for n=" + std::to_string(header.n));
        }
        z = zone_add_constraint(z, l.i, l.j, l.c);
    }
    return z;
}

} // namespace octobench
