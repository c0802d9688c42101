// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/dfa.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "octobench/text_format.hpp"

namespace octobench::dfa {

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok : std::uint8_t {
    Ident, Int, Assign, Semi, Comma, LParen, RParen, LBrace, RBrace, Plus, Minus, Le, Ge, Lt, Gt, End
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    std::size_t line = 0;
    std::size_t column = 0;
};

std::string describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Assign: return "':='";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Le: return "'<='";
    case Tok::Ge: return "'>='";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::End: return "end of input";
    }
    return "token";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t pos = 0;
    const auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    };
    while (pos < src.size()) {
        const char c = src[pos];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (pos < src.size() && src[pos] != '\n') {
                advance(1);
            }
            continue;
        }
        Token t{Tok::End, {}, 0, line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            std::size_t end = pos;
            while (end < src.size() && (std::isalnum(static_cast<unsigned char>(src[end])) != 0 || src[end] == '_')) {
                ++end;
            }
            t.kind = Tok::Ident;
            t.text = std::string(src.substr(pos, end - pos));
            out.push_back(t);
            advance(end - pos);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const auto [ptr, ec] = std::from_chars(src.data() + pos, src.data() + src.size(), t.value);
            if (ec != std::errc{}) {
                throw ParseError(line, col, "integer literal out of range");
            }
            t.kind = Tok::Int;
            const auto len = static_cast<std::size_t>(ptr - (src.data() + pos));
            t.text = std::string(src.substr(pos, len));
            out.push_back(t);
            advance(len);
            continue;
        }
        const auto two = src.substr(pos, 2);
        if (two == ":=" || two == "<=" || two == ">=") {
            t.kind = two == ":=" ? Tok::Assign : (two == "<=" ? Tok::Le : Tok::Ge);
            t.text = std::string(two);
            out.push_back(t);
            advance(2);
            continue;
        }
        switch (c) {
        case ';': t.kind = Tok::Semi; break;
        case ',': t.kind = Tok::Comma; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '<': t.kind = Tok::Lt; break;
        case '>': t.kind = Tok::Gt; break;
        default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
        out.push_back(t);
        advance(1);
    }
    out.push_back({Tok::End, {}, 0, line, col});
    return out;
}

// ---------------------------------------------------------------- parsing

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program program() {
        Program p;
        while (peek().kind == Tok::Ident && peek().text == "var") {
            next();
            for (;;) {
                const Token& name = expect(Tok::Ident);
                if (is_keyword(name.text)) {
                    throw ParseError(name.line, name.column, "'" + name.text + "' is a keyword");
                }
                if (vars_.contains(name.text)) {
                    throw ParseError(name.line, name.column, "variable '" + name.text + "' declared twice");
                }
                vars_.emplace(name.text, p.vars.size());
                p.vars.push_back(name.text);
                if (peek().kind == Tok::Comma) {
                    next();
                    continue;
                }
                break;
            }
            expect(Tok::Semi);
        }
        while (peek().kind != Tok::End) {
            p.body.push_back(statement());
        }
        return p;
    }

  private:
    static bool is_keyword(const std::string& s) { return s == "var" || s == "while" || s == "assume"; }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const Token& t, const std::string& what) const {
        throw ParseError(t.line, t.column, what);
    }

    const Token& expect(Tok kind) {
        const Token& t = peek();
        if (t.kind != kind) {
            fail(t, "expected " + describe(kind) + ", found " + (t.text.empty() ? describe(t.kind) : "'" + t.text + "'"));
        }
        return next();
    }

    std::size_t variable() {
        const Token& t = expect(Tok::Ident);
        const auto it = vars_.find(t.text);
        if (it == vars_.end()) {
            fail(t, "undeclared variable '" + t.text + "'");
        }
        return it->second;
    }

    std::int64_t integer() {
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            next();
            negative = true;
        }
        const std::int64_t v = expect(Tok::Int).value;
        return negative ? -v : v;
    }

    Stmt statement() {
        const Token& head = peek();
        if (head.kind == Tok::Ident && head.text == "while") {
            next();
            Stmt s;
            s.kind = Stmt::Kind::While;
            expect(Tok::LParen);
            s.cond = condition();
            expect(Tok::RParen);
            const Token& open = expect(Tok::LBrace);
            while (peek().kind != Tok::RBrace) {
                if (peek().kind == Tok::End) {
                    fail(peek(), "unterminated loop body");
                }
                s.body.push_back(statement());
            }
            if (s.body.empty()) {
                fail(open, "loop body must not be empty");
            }
            next();
            return s;
        }
        if (head.kind == Tok::Ident && head.text == "assume") {
            next();
            Stmt s;
            s.kind = Stmt::Kind::Assume;
            expect(Tok::LParen);
            s.cond = condition();
            expect(Tok::RParen);
            expect(Tok::Semi);
            return s;
        }
        if (head.kind == Tok::Ident && head.text == "var") {
            fail(head, "declarations must precede statements");
        }
        Stmt s;
        s.kind = Stmt::Kind::Assign;
        s.assign.target = variable();
        expect(Tok::Assign);
        Assignment& a = s.assign;
        if (peek().kind == Tok::Int || peek().kind == Tok::Minus) {
            a.kind = Assignment::Kind::Const;
            a.k = integer();
        } else {
            a.src = variable();
            a.kind = Assignment::Kind::Copy;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                const bool minus = next().kind == Tok::Minus;
                if (peek().kind == Tok::Int) {
                    a.kind = Assignment::Kind::AddConst;
                    a.k = minus ? -next().value : next().value;
                } else if (!minus && peek().kind == Tok::Ident) {
                    a.kind = Assignment::Kind::AddVar;
                    a.src2 = variable();
                } else {
                    fail(peek(), minus ? "expected an integer after '-'" : "expected an integer or a variable after '+'");
                }
            }
        }
        expect(Tok::Semi);
        return s;
    }

    Condition condition() {
        Condition c;
        if (peek().kind == Tok::Minus) {
            next();
            c.negate_first = true;
        }
        c.first = variable();
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            const Token& at = peek();
            const std::size_t v = variable();
            if (v == c.first) {
                fail(at, "a condition must relate two distinct variables");
            }
            c.second = std::pair{minus, v};
        }
        switch (peek().kind) {
        case Tok::Le: c.op = CmpOp::Le; break;
        case Tok::Ge: c.op = CmpOp::Ge; break;
        case Tok::Lt: c.op = CmpOp::Lt; break;
        case Tok::Gt: c.op = CmpOp::Gt; break;
        default: fail(peek(), "expected a comparison operator");
        }
        next();
        c.k = integer();
        return c;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> vars_;
};

// ---------------------------------------------------------------- printing

const char* op_text(CmpOp op) {
    switch (op) {
    case CmpOp::Le: return "<=";
    case CmpOp::Ge: return ">=";
    case CmpOp::Lt: return "<";
    case CmpOp::Gt: return ">";
    }
    return "<=";
}

void print_condition(std::ostream& os, const Program& p, const Condition& c) {
    os << (c.negate_first ? "-" : "") << p.vars[c.first];
    if (c.second) {
        os << (c.second->first ? " - " : " + ") << p.vars[c.second->second];
    }
    os << ' ' << op_text(c.op) << ' ' << c.k;
}

void print_block(std::ostream& os, const Program& p, const std::vector<Stmt>& body, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const Stmt& s : body) {
        os << pad;
        switch (s.kind) {
        case Stmt::Kind::Assign: {
            const Assignment& a = s.assign;
            os << p.vars[a.target] << " := ";
            switch (a.kind) {
            case Assignment::Kind::Const: os << a.k; break;
            case Assignment::Kind::Copy: os << p.vars[a.src]; break;
            case Assignment::Kind::AddConst:
                os << p.vars[a.src] << (a.k < 0 ? " - " : " + ") << (a.k < 0 ? -a.k : a.k);
                break;
            case Assignment::Kind::AddVar: os << p.vars[a.src] << " + " << p.vars[a.src2]; break;
            }
            os << ";\n";
            break;
        }
        case Stmt::Kind::Assume:
            os << "assume(";
            print_condition(os, p, s.cond);
            os << ");\n";
            break;
        case Stmt::Kind::While:
            os << "while (";
            print_condition(os, p, s.cond);
            os << ") {\n";
            print_block(os, p, s.body, indent + 1);
            os << pad << "}\n";
            break;
        }
    }
}

// ---------------------------------------------------------------- cfg

class CfgBuilder {
  public:
    explicit CfgBuilder(Cfg& cfg) : cfg_(cfg) {}

    std::size_t node() {
        cfg_.loop_head.push_back(false);
        return cfg_.num_nodes++;
    }

    void edge(std::size_t from, std::size_t to, Action a, bool back = false) {
        cfg_.edges.push_back({from, to, std::move(a), back});
    }

    std::size_t block(const std::vector<Stmt>& body, std::size_t cur) {
        for (const Stmt& s : body) {
            switch (s.kind) {
            case Stmt::Kind::Assign: {
                const std::size_t n = node();
                edge(cur, n, {Action::Kind::Assign, s.assign, {}});
                cur = n;
                break;
            }
            case Stmt::Kind::Assume: {
                const std::size_t n = node();
                edge(cur, n, {Action::Kind::Assume, {}, s.cond.to_constraint()});
                cur = n;
                break;
            }
            case Stmt::Kind::While: {
                const Constraint k = s.cond.to_constraint();
                const std::size_t head = node();
                cfg_.loop_head[head] = true;
                edge(cur, head, {});
                const std::size_t body_start = node();
                edge(head, body_start, {Action::Kind::Assume, {}, k});
                const std::size_t body_end = block(s.body, body_start);
                edge(body_end, head, {}, true);
                const std::size_t after = node();
                edge(head, after, {Action::Kind::Assume, {}, negate(k)});
                cur = after;
                break;
            }
            }
        }
        return cur;
    }

  private:
    Cfg& cfg_;
};

// ---------------------------------------------------------------- analysis

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

Octagon timed_close_full(const Octagon& o, Counters* c) {
    const auto start = Clock::now();
    Octagon out = close_full(o);
    if (c != nullptr) {
        c->closure_ns += elapsed_ns(start);
        ++c->closures_full;
    }
    return out;
}

/// Adds k to a closed state and restores closure with the selected algorithm.
Octagon add_and_close(const Octagon& o, const Constraint& k, const AnalysisOptions& opt, Counters* c) {
    if (o.is_bottom()) {
        return o;
    }
    if (opt.closure == OpId::CloseFull) {
        return timed_close_full(add_constraint(o, k), c);
    }
    const auto start = Clock::now();
    Octagon out = opt.closure == OpId::IncMine ? close_incremental_mine(o, k) : close_incremental_chawdhary(o, k);
    if (c != nullptr) {
        c->closure_ns += elapsed_ns(start);
        ++c->closures_incremental;
    }
    return out;
}

Octagon counted_forget(const Octagon& o, std::size_t v, Counters* c) {
    if (c != nullptr) {
        ++c->forgets;
    }
    return forget(o, v);
}

std::string bound_text(const std::optional<std::int64_t>& v, const char* inf) {
    return v ? std::to_string(*v) : std::string(inf);
}

/// Rewrites x<i> tokens of the octagon text format into program names.
std::string with_names(const std::string& line, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] == 'x' && k + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[k + 1])) != 0) {
            std::size_t end = k + 1;
            std::size_t idx = 0;
            while (end < line.size() && std::isdigit(static_cast<unsigned char>(line[end])) != 0) {
                idx = idx * 10 + static_cast<std::size_t>(line[end] - '0');
                ++end;
            }
            out += idx < vars.size() ? vars[idx] : line.substr(k, end - k);
            k = end - 1;
        } else {
            out += line[k];
        }
    }
    return out;
}

std::vector<std::string> constraint_lines(const Octagon& o, const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    std::istringstream in(to_text(o));
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        out.push_back(with_names(line, vars));
    }
    return out;
}

} // namespace

Constraint Condition::to_constraint() const {
    // Normalise to (sign1 * first + sign2 * second) <= c.
    bool neg1 = negate_first;
    bool neg2 = second && second->first;
    std::int64_t c = k;
    switch (op) {
    case CmpOp::Le: break;
    case CmpOp::Lt: c = k - 1; break;
    case CmpOp::Ge:
    case CmpOp::Gt:
        neg1 = !neg1;
        neg2 = !neg2;
        c = op == CmpOp::Ge ? -k : -k - 1;
        break;
    }
    if (!second) {
        return neg1 ? Constraint::lower(first, -c) : Constraint::upper(first, c);
    }
    const std::size_t j = second->second;
    if (!neg1 && !neg2) {
        return Constraint::sum(first, j, c);
    }
    if (!neg1 && neg2) {
        return Constraint::diff(first, j, c);
    }
    if (neg1 && !neg2) {
        return Constraint::diff(j, first, c);
    }
    return Constraint::neg_sum(first, j, c);
}

Constraint negate(const Constraint& k) {
    const std::int64_t c = k.c.value();
    switch (k.kind) {
    case ConstraintKind::UpperLE: return Constraint::lower(k.i, c + 1);
    case ConstraintKind::LowerGE: return Constraint::upper(k.i, c - 1);
    case ConstraintKind::DiffLE: return Constraint::diff(k.j, k.i, -c - 1);
    case ConstraintKind::NegDiffLE: return Constraint::diff(k.i, k.j, -c - 1);
    case ConstraintKind::SumLE: return Constraint::neg_sum(k.i, k.j, -c - 1);
    case ConstraintKind::NegSumLE: return Constraint::sum(k.i, k.j, -c - 1);
    }
    throw std::logic_error("unknown constraint kind");
}

Program parse_program(std::string_view text) { return Parser(lex(text)).program(); }

std::string pretty_print(const Program& p) {
    std::ostringstream os;
    if (!p.vars.empty()) {
        os << "var ";
        for (std::size_t k = 0; k < p.vars.size(); ++k) {
            os << (k ? ", " : "") << p.vars[k];
        }
        os << ";\n";
    }
    print_block(os, p, p.body, 0);
    return os.str();
}

std::string builtin_source(std::string_view name) {
    if (name == "loop") {
        return "# counting loop over a single variable\n"
               "var i;\n"
               "i := 0;\n"
               "while (i <= 9) {\n"
               "  i := i + 1;\n"
               "}\n";
    }
    if (name == "fib") {
        return "# ten Fibonacci steps from (0, 1)\n"
               "var a, b, i, t;\n"
               "a := 0;\n"
               "b := 1;\n"
               "i := 0;\n"
               "while (i <= 9) {\n"
               "  t := a + b;\n"
               "  a := b;\n"
               "  b := t;\n"
               "  i := i + 1;\n"
               "}\n";
    }
    throw std::invalid_argument("unknown built-in program '" + std::string(name) + "' (expected loop or fib)");
}

std::string load_program_text(const std::string& spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        return builtin_source(std::string_view(spec).substr(prefix.size()));
    }
    std::ifstream in(spec, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read program file '" + spec + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::size_t> Cfg::loop_heads() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < num_nodes; ++v) {
        if (loop_head[v]) {
            out.push_back(v);
        }
    }
    return out;
}

Cfg build_cfg(const Program& p) {
    if (p.vars.empty()) {
        throw std::invalid_argument("program declares no variables");
    }
    Cfg cfg;
    cfg.num_vars = p.vars.size();
    CfgBuilder b(cfg);
    cfg.entry = b.node();
    cfg.exit = b.block(p.body, cfg.entry);
    return cfg;
}

Octagon transfer(const Action& a, const Octagon& closed_in, const AnalysisOptions& opt, Counters* c) {
    if (closed_in.is_bottom()) {
        return closed_in;
    }
    if (!closed_in.is_closed()) {
        throw std::logic_error("transfer requires a strongly closed state");
    }
    if (c != nullptr) {
        ++c->transfers;
    }
    switch (a.kind) {
    case Action::Kind::Skip: return closed_in;
    case Action::Kind::Assume: return add_and_close(closed_in, a.cond, opt, c);
    case Action::Kind::Assign: break;
    }
    const Assignment& s = a.assign;
    const std::size_t x = s.target;
    switch (s.kind) {
    case Assignment::Kind::Const: {
        Octagon o = counted_forget(closed_in, x, c);
        o = add_and_close(o, Constraint::upper(x, s.k), opt, c);
        return add_and_close(o, Constraint::lower(x, s.k), opt, c);
    }
    case Assignment::Kind::Copy:
    case Assignment::Kind::AddConst: {
        const std::int64_t k = s.kind == Assignment::Kind::Copy ? 0 : s.k;
        if (s.src == x) {
            return k == 0 ? closed_in : shift_variable(closed_in, x, k);
        }
        Octagon o = counted_forget(closed_in, x, c);
        o = add_and_close(o, Constraint::diff(x, s.src, k), opt, c);
        return add_and_close(o, Constraint::diff(s.src, x, -k), opt, c);
    }
    case Assignment::Kind::AddVar: {
        const Interval iy = interval_of(closed_in, s.src);
        const Interval iz = interval_of(closed_in, s.src2);
        Octagon o = counted_forget(closed_in, x, c);
        if (iy.hi && iz.hi) {
            o = add_and_close(o, Constraint::upper(x, *iy.hi + *iz.hi), opt, c);
        }
        if (iy.lo && iz.lo) {
            o = add_and_close(o, Constraint::lower(x, *iy.lo + *iz.lo), opt, c);
        }
        return o;
    }
    }
    throw std::logic_error("unknown assignment kind");
}

Analysis analyze(const Cfg& cfg, const AnalysisOptions& opt) {
    if (!is_closure_op(opt.closure)) {
        throw std::invalid_argument("closure choice must be close-full, inc-mine or inc-chawdhary");
    }
    const auto start = Clock::now();
    Analysis result;
    result.cfg = cfg;
    Counters& c = result.counters;
    std::vector<std::vector<const CfgEdge*>> out_edges(cfg.num_nodes);
    for (const CfgEdge& e : cfg.edges) {
        out_edges[e.from].push_back(&e);
    }
    std::vector<std::optional<Octagon>> state(cfg.num_nodes);
    std::vector<std::size_t> visits(cfg.num_nodes, 0);
    std::set<std::size_t> worklist{cfg.entry};
    state[cfg.entry] = Octagon::top(cfg.num_vars);

    while (!worklist.empty()) {
        const std::size_t u = *worklist.begin();
        worklist.erase(worklist.begin());
        const Octagon in = state[u]->is_closed() ? *state[u] : timed_close_full(*state[u], &c);
        if (in.is_bottom()) {
            continue;
        }
        for (const CfgEdge* e : out_edges[u]) {
            Octagon out = transfer(e->action, in, opt, &c);
            if (out.is_bottom()) {
                continue;
            }
            const std::size_t v = e->to;
            if (++c.node_updates > opt.max_updates) {
                throw std::runtime_error("analysis exceeded " + std::to_string(opt.max_updates) + " state updates");
            }
            if (!state[v]) {
                state[v] = std::move(out);
                visits[v] = 1;
                worklist.insert(v);
                continue;
            }
            ++c.joins;
            Octagon next = join(*state[v], out);
            if (cfg.loop_head[v] && visits[v] >= opt.widen_delay) {
                ++c.widens;
                next = widen(*state[v], next);
            }
            ++visits[v];
            if (!(next == *state[v])) {
                state[v] = std::move(next);
                worklist.insert(v);
            }
        }
    }
    result.invariants.resize(cfg.num_nodes);
    for (std::size_t v = 0; v < cfg.num_nodes; ++v) {
        if (state[v]) {
            result.invariants[v] = state[v]->is_closed() ? *state[v] : close_full(*state[v]);
        }
    }
    result.analysis_ns = elapsed_ns(start);
    return result;
}

std::vector<TraceStep> concrete_exec(const Cfg& cfg, std::size_t max_steps) {
    std::vector<std::vector<const CfgEdge*>> out_edges(cfg.num_nodes);
    for (const CfgEdge& e : cfg.edges) {
        out_edges[e.from].push_back(&e);
    }
    std::vector<TraceStep> trace;
    std::vector<std::int64_t> vals(cfg.num_vars, 0);
    std::size_t node = cfg.entry;
    for (;;) {
        if (trace.size() >= max_steps) {
            throw std::runtime_error("concrete execution exceeded " + std::to_string(max_steps) + " steps");
        }
        trace.push_back({node, vals});
        const CfgEdge* taken = nullptr;
        for (const CfgEdge* e : out_edges[node]) {
            if (e->action.kind != Action::Kind::Assume || e->action.cond.satisfied_by(vals.data())) {
                taken = e;
                break;
            }
        }
        if (taken == nullptr) {
            break; // exit reached, or a failing assume blocks the run
        }
        if (taken->action.kind == Action::Kind::Assign) {
            const Assignment& a = taken->action.assign;
            switch (a.kind) {
            case Assignment::Kind::Const: vals[a.target] = a.k; break;
            case Assignment::Kind::Copy: vals[a.target] = vals[a.src]; break;
            case Assignment::Kind::AddConst: vals[a.target] = vals[a.src] + a.k; break;
            case Assignment::Kind::AddVar: vals[a.target] = vals[a.src] + vals[a.src2]; break;
            }
        }
        node = taken->to;
    }
    return trace;
}

std::string render_summary(const Program& p, const Analysis& a, const AnalysisOptions& opt) {
    std::ostringstream os;
    const Counters& c = a.counters;
    os << "closure=" << to_string(opt.closure) << "  widen_delay=" << opt.widen_delay << "  points=" << a.cfg.num_nodes
       << '\n';
    os << "invocations: closure-full=" << c.closures_full << " closure-incremental=" << c.closures_incremental
       << " join=" << c.joins << " widen=" << c.widens << " forget=" << c.forgets << " transfer=" << c.transfers
       << '\n';
    char buf[96];
    std::snprintf(buf, sizeof buf, "time: closure %.3f ms, analysis %.3f ms\n", static_cast<double>(c.closure_ns) / 1e6,
                  static_cast<double>(a.analysis_ns) / 1e6);
    os << buf;
    for (const std::size_t h : a.cfg.loop_heads()) {
        const auto& inv = a.invariants[h];
        std::snprintf(buf, sizeof buf, "loop head %zu: density %.3f\n", h,
                      inv && !inv->is_bottom() ? achieved_density(*inv) : 0.0);
        os << buf;
    }
    os << "exit invariant:\n";
    const auto& exit = a.invariants[a.cfg.exit];
    if (!exit || exit->is_bottom()) {
        os << "  unreachable\n";
        return os.str();
    }
    for (std::size_t v = 0; v < p.vars.size(); ++v) {
        const Interval iv = interval_of(*exit, v);
        os << "  " << p.vars[v] << " in [" << bound_text(iv.lo, "-oo") << ", " << bound_text(iv.hi, "+oo") << "]\n";
    }
    return os.str();
}

std::string to_json(const Program& p, const Analysis& a, const AnalysisOptions& opt, const std::string& program_name) {
    using nlohmann::ordered_json;
    const Counters& c = a.counters;
    ordered_json doc;
    doc["program"] = program_name;
    doc["closure"] = std::string(to_string(opt.closure));
    doc["widen_delay"] = opt.widen_delay;
    doc["variables"] = p.vars;
    doc["counters"] = ordered_json{{"closure_full", c.closures_full},   {"closure_incremental", c.closures_incremental},
                                   {"join", c.joins},                   {"widen", c.widens},
                                   {"forget", c.forgets},               {"transfer", c.transfers},
                                   {"node_updates", c.node_updates}};
    doc["timings"] = ordered_json{{"closure_ms", static_cast<double>(c.closure_ns) / 1e6},
                                  {"analysis_ms", static_cast<double>(a.analysis_ns) / 1e6}};
    ordered_json points = ordered_json::array();
    for (std::size_t v = 0; v < a.cfg.num_nodes; ++v) {
        ordered_json pt;
        pt["point"] = v;
        pt["loop_head"] = static_cast<bool>(a.cfg.loop_head[v]);
        const auto& inv = a.invariants[v];
        pt["reachable"] = inv.has_value() && !inv->is_bottom();
        if (inv && !inv->is_bottom()) {
            pt["density"] = achieved_density(*inv);
            ordered_json intervals;
            for (std::size_t k = 0; k < p.vars.size(); ++k) {
                const Interval iv = interval_of(*inv, k);
                intervals[p.vars[k]] = ordered_json::array({iv.lo ? ordered_json(*iv.lo) : ordered_json(nullptr),
                                                            iv.hi ? ordered_json(*iv.hi) : ordered_json(nullptr)});
            }
            pt["intervals"] = std::move(intervals);
            pt["constraints"] = constraint_lines(*inv, p.vars);
        }
        points.push_back(std::move(pt));
    }
    doc["entry"] = a.cfg.entry;
    doc["exit"] = a.cfg.exit;
    doc["points"] = std::move(points);
    return doc.dump(2) + "\n";
}

} // namespace octobench::dfa
