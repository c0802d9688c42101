// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once
// A small data-flow analyzer over octagons for programs built from integer
// assignments, assumptions and while loops.
//
//   program := decl* stmt*
//   decl    := "var" ident ("," ident)* ";"
//   stmt    := ident ":=" rhs ";" | "assume" "(" cond ")" ";"
//            | "while" "(" cond ")" "{" stmt+ "}"
//   rhs     := int | ident | ident ("+" | "-") int | ident "+" ident
//   cond    := ["-"] ident [("+" | "-") ident] ("<=" | ">=" | "<" | ">") int
//
// '#' starts a comment that runs to the end of the line.
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octobench/constraint.hpp"
#include "octobench/octagon.hpp"
#include "octobench/ops.hpp"

namespace octobench::dfa {

enum class CmpOp : std::uint8_t { Le, Ge, Lt, Gt };

/// Surface form of a condition, kept for printing.
struct Condition {
    bool negate_first = false;
    std::size_t first = 0;
    std::optional<std::pair<bool, std::size_t>> second; ///< (is_minus, var)
    CmpOp op = CmpOp::Le;
    std::int64_t k = 0;

    /// The equivalent constraint over the integers.
    [[nodiscard]] Constraint to_constraint() const;
    friend bool operator==(const Condition&, const Condition&) = default;
};

/// The integer complement of k: not(e <= c) is -e <= -c - 1.
Constraint negate(const Constraint& k);

struct Assignment {
    enum class Kind : std::uint8_t { Const, Copy, AddConst, AddVar };
    Kind kind = Kind::Const;
    std::size_t target = 0;
    std::size_t src = 0;
    std::size_t src2 = 0;
    std::int64_t k = 0;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Stmt {
    enum class Kind : std::uint8_t { Assign, Assume, While };
    Kind kind = Kind::Assign;
    Assignment assign;
    Condition cond;
    std::vector<Stmt> body;

    friend bool operator==(const Stmt&, const Stmt&) = default;
};

struct Program {
    std::vector<std::string> vars;
    std::vector<Stmt> body;

    friend bool operator==(const Program&, const Program&) = default;
};

/// Throws octobench::ParseError with a 1-based line and column.
Program parse_program(std::string_view text);
std::string pretty_print(const Program& p);

/// Source text of a built-in program ("loop" or "fib").
std::string builtin_source(std::string_view name);
/// Resolves "builtin:<name>" or reads a file.
std::string load_program_text(const std::string& spec);

struct Action {
    enum class Kind : std::uint8_t { Skip, Assign, Assume };
    Kind kind = Kind::Skip;
    Assignment assign;
    Constraint cond;
};

struct CfgEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    Action action;
    bool back = false;
};

struct Cfg {
    std::size_t num_nodes = 0;
    std::size_t entry = 0;
    std::size_t exit = 0;
    std::vector<CfgEdge> edges;
    std::vector<bool> loop_head;
    std::size_t num_vars = 0;

    [[nodiscard]] std::vector<std::size_t> loop_heads() const;
};

Cfg build_cfg(const Program& p);

struct Counters {
    std::uint64_t closures_full = 0;
    std::uint64_t closures_incremental = 0;
    std::uint64_t joins = 0;
    std::uint64_t widens = 0;
    std::uint64_t forgets = 0;
    std::uint64_t transfers = 0;
    std::uint64_t node_updates = 0;
    std::uint64_t closure_ns = 0;
};

struct AnalysisOptions {
    /// close-full, inc-mine or inc-chawdhary.
    OpId closure = OpId::CloseFull;
    std::size_t widen_delay = 3;
    std::size_t max_updates = 100000;
};

/// Applies one edge action to a strongly closed state. Constraints are added
/// one at a time, each followed by the selected closure.
Octagon transfer(const Action& a, const Octagon& closed_in, const AnalysisOptions& options,
                 Counters* counters = nullptr);

struct Analysis {
    Cfg cfg;
    /// Closed invariant per program point; nullopt for unreachable points.
    std::vector<std::optional<Octagon>> invariants;
    Counters counters;
    std::uint64_t analysis_ns = 0;
};

/// Worklist fixpoint. Throws std::runtime_error if max_updates is exceeded.
Analysis analyze(const Cfg& cfg, const AnalysisOptions& options = {});

struct TraceStep {
    std::size_t node;
    std::vector<std::int64_t> values;
};

/// Exact execution from the all-zero valuation. Throws std::runtime_error
/// once more than max_steps program points have been visited.
std::vector<TraceStep> concrete_exec(const Cfg& cfg, std::size_t max_steps = 100000);

/// Human-readable summary and a JSON document for `--report`.
std::string render_summary(const Program& p, const Analysis& a, const AnalysisOptions& options);
std::string to_json(const Program& p, const Analysis& a, const AnalysisOptions& options,
                    const std::string& program_name);

} // namespace octobench::dfa
