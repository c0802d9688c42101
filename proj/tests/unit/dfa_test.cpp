// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/dfa.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include "octobench/oracle.hpp"
#include "octobench/text_format.hpp"

using namespace octobench;
using namespace octobench::dfa;

namespace {

Program builtin(const char* name) { return parse_program(builtin_source(name)); }

Action assign(Assignment::Kind kind, std::size_t target, std::size_t src, std::int64_t k, std::size_t src2 = 0) {
    return {Action::Kind::Assign, {kind, target, src, src2, k}, {}};
}

Action assume(const Constraint& k) { return {Action::Kind::Assume, {}, k}; }

Octagon closed_top(std::size_t n) { return close_full(Octagon::top(n)); }

const std::vector<OpId> closures{OpId::CloseFull, OpId::IncMine, OpId::IncChawdhary};

} // namespace

TEST(DfaParse, BuiltinsParse) {
    const Program loop = builtin("loop");
    EXPECT_EQ(loop.vars, std::vector<std::string>{"i"});
    ASSERT_EQ(loop.body.size(), 2U);
    EXPECT_EQ(loop.body[1].kind, Stmt::Kind::While);
    const Program fib = builtin("fib");
    EXPECT_EQ(fib.vars.size(), 4U);
    EXPECT_EQ(fib.body[3].body.size(), 4U);
}

TEST(DfaParse, SyntaxErrorAtStar) {
    try {
        parse_program("var x, y;\nx := y *");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_EQ(e.column(), 8U);
    }
}

TEST(DfaParse, RejectsUndeclaredAndEmptyBody) {
    EXPECT_THROW(parse_program("var x;\ny := 1;"), ParseError);
    EXPECT_THROW(parse_program("var x;\nwhile (x <= 3) { }"), ParseError);
    EXPECT_THROW(parse_program("var x, y, z;\nassume(x + y + z <= 3);"), ParseError);
}

TEST(DfaParse, PrettyPrintRoundTrips) {
    const char* src = "var x, y, z;\n"
                      "x := -4;  # comment\n"
                      "y := x;\n"
                      "z := y - 7;\n"
                      "z := x + y;\n"
                      "assume(-x - y >= -12);\n"
                      "assume(x < 5);\n"
                      "while (x - y > 2) { x := x + 1; assume(-z <= 0); }\n";
    const Program p = parse_program(src);
    const std::string printed = pretty_print(p);
    EXPECT_EQ(parse_program(printed), p);
    EXPECT_EQ(pretty_print(parse_program(printed)), printed);
    for (const char* name : {"loop", "fib"}) {
        EXPECT_EQ(parse_program(pretty_print(builtin(name))), builtin(name)) << name;
    }
}

TEST(DfaParse, ConditionNormalisation) {
    const Program p = parse_program("var x, y;\nassume(x - y <= 3);\nassume(-x >= 2);\nassume(x + y > 1);\n");
    EXPECT_EQ(p.body[0].cond.to_constraint(), Constraint::diff(0, 1, 3));
    EXPECT_EQ(p.body[1].cond.to_constraint(), Constraint::upper(0, -2));
    EXPECT_EQ(p.body[2].cond.to_constraint(), Constraint::neg_sum(0, 1, -2));
}

TEST(DfaParse, NegationIsIntegerComplement) {
    const std::vector<Constraint> ks{Constraint::upper(0, 3),  Constraint::lower(1, -2),   Constraint::diff(0, 1, 4),
                                     Constraint::sum(0, 1, 1), Constraint::neg_sum(0, 1, 0)};
    oracle::for_each_point(2, 6, [&](std::span<const std::int64_t> pt) {
        for (const Constraint& k : ks) {
            EXPECT_NE(k.satisfied_by(pt.data()), negate(k).satisfied_by(pt.data())) << k.to_string();
        }
    });
}

TEST(DfaTransfer, ConstOnTop) {
    for (const OpId c : closures) {
        const Octagon o = transfer(assign(Assignment::Kind::Const, 0, 0, 3), closed_top(2), {c});
        const Interval iv = interval_of(o, 0);
        EXPECT_EQ(iv.lo, 3);
        EXPECT_EQ(iv.hi, 3);
        EXPECT_TRUE(o.is_closed());
    }
}

TEST(DfaTransfer, CopyPlusConstant) {
    const Octagon y_le_2 = close_full(add_constraint(Octagon::top(2), Constraint::upper(1, 2)));
    for (const OpId c : closures) {
        const Octagon o = transfer(assign(Assignment::Kind::AddConst, 0, 1, 1), y_le_2, {c});
        EXPECT_EQ(interval_of(o, 0).hi, 3);
        // Exact projection of {x = y + 1, y <= 2} within the box.
        const std::vector<Constraint> ks{Constraint::upper(1, 2), Constraint::diff(0, 1, 1), Constraint::diff(1, 0, -1)};
        EXPECT_EQ(o, oracle::closure_by_enumeration(2, ks, 24));
    }
}

TEST(DfaTransfer, AssumeMatchesOracleSubset) {
    for (const OpId c : closures) {
        const Octagon o = transfer(assume(Constraint::diff(0, 1, 0)), closed_top(2), {c});
        const Octagon expected = close_full(add_constraint(Octagon::top(2), Constraint::diff(0, 1, 0)));
        EXPECT_TRUE(includes(expected, o));
        EXPECT_TRUE(includes(o, expected));
        EXPECT_TRUE(oracle::subset_points(o, expected, 10));
        EXPECT_TRUE(oracle::subset_points(expected, o, 10));
    }
}

TEST(DfaTransfer, SelfIncrementShifts) {
    const Octagon in = close_full(add_constraint(add_constraint(Octagon::top(2), Constraint::upper(0, 4)),
                                                 Constraint::diff(0, 1, 1)));
    const Octagon o = transfer(assign(Assignment::Kind::AddConst, 0, 0, 5), in, {});
    EXPECT_EQ(interval_of(o, 0).hi, 9);
    EXPECT_EQ(o.at(2, 0), Bound{6}); // x - y <= 6
}

TEST(DfaTransfer, SumIsIntervalApproximation) {
    Octagon in = Octagon::top(3);
    in = add_constraint(in, Constraint::upper(1, 2));
    in = add_constraint(in, Constraint::lower(1, 0));
    in = add_constraint(in, Constraint::upper(2, 5));
    in = add_constraint(in, Constraint::lower(2, 1));
    const Octagon o = transfer(assign(Assignment::Kind::AddVar, 0, 1, 0, 2), close_full(in), {});
    EXPECT_EQ(interval_of(o, 0).lo, 1);
    EXPECT_EQ(interval_of(o, 0).hi, 7);
}

TEST(DfaTransfer, BottomPropagates) {
    const Octagon bot = Octagon::bottom(2);
    EXPECT_TRUE(transfer(assign(Assignment::Kind::Const, 0, 0, 1), bot, {}).is_bottom());
    const Octagon x_is_1 = transfer(assign(Assignment::Kind::Const, 0, 0, 1), closed_top(2), {OpId::IncMine});
    EXPECT_TRUE(transfer(assume(Constraint::lower(0, 2)), x_is_1, {OpId::IncChawdhary}).is_bottom());
}

TEST(DfaCfg, LoopStructure) {
    const Cfg cfg = build_cfg(builtin("loop"));
    EXPECT_EQ(cfg.loop_heads().size(), 1U);
    std::size_t back = 0;
    for (const CfgEdge& e : cfg.edges) {
        back += e.back ? 1 : 0;
        if (e.back) {
            EXPECT_TRUE(cfg.loop_head[e.to]);
        }
    }
    EXPECT_EQ(back, 1U);
}

TEST(DfaConcrete, LoopEndsAtTen) {
    const Cfg cfg = build_cfg(builtin("loop"));
    const auto trace = concrete_exec(cfg);
    EXPECT_EQ(trace.back().node, cfg.exit);
    EXPECT_EQ(trace.back().values[0], 10);
    const std::size_t head = cfg.loop_heads()[0];
    std::size_t head_visits = 0;
    for (const auto& s : trace) {
        head_visits += s.node == head ? 1 : 0;
    }
    EXPECT_EQ(head_visits, 11U); // 10 iterations plus the final test
}

TEST(DfaConcrete, FibonacciReaches89) {
    const Cfg cfg = build_cfg(builtin("fib"));
    const auto trace = concrete_exec(cfg);
    // Independent recurrence.
    std::int64_t a = 0;
    std::int64_t b = 1;
    for (int k = 0; k < 10; ++k) {
        const std::int64_t t = a + b;
        a = b;
        b = t;
    }
    EXPECT_EQ(b, 89);
    EXPECT_EQ(trace.back().node, cfg.exit);
    EXPECT_EQ(trace.back().values[1], b);
    EXPECT_EQ(trace.back().values[2], 10);
}

TEST(DfaConcrete, StepBudget) {
    const Cfg cfg = build_cfg(parse_program("var x;\nwhile (x >= 0) { x := x + 1; }"));
    EXPECT_THROW(concrete_exec(cfg, 1000), std::runtime_error);
}

TEST(DfaAnalyze, SoundAgainstConcreteTrace) {
    for (const char* name : {"loop", "fib"}) {
        const Cfg cfg = build_cfg(builtin(name));
        const auto trace = concrete_exec(cfg);
        for (const OpId c : closures) {
            const Analysis a = analyze(cfg, {c});
            for (const TraceStep& s : trace) {
                ASSERT_TRUE(a.invariants[s.node].has_value()) << name << " point " << s.node;
                EXPECT_TRUE(satisfies(*a.invariants[s.node], s.values)) << name << " point " << s.node;
            }
        }
    }
}

TEST(DfaAnalyze, LoopExitContainsTen) {
    const Cfg cfg = build_cfg(builtin("loop"));
    const Analysis a = analyze(cfg);
    const Interval iv = interval_of(*a.invariants[cfg.exit], 0);
    ASSERT_TRUE(iv.lo.has_value());
    EXPECT_LE(*iv.lo, 10);
    EXPECT_TRUE(!iv.hi || *iv.hi >= 10);
}

TEST(DfaAnalyze, ClosureChoiceDoesNotChangeInvariants) {
    for (const char* name : {"loop", "fib"}) {
        const Cfg cfg = build_cfg(builtin(name));
        const Analysis full = analyze(cfg, {OpId::CloseFull});
        for (const OpId c : {OpId::IncMine, OpId::IncChawdhary}) {
            const Analysis inc = analyze(cfg, {c});
            ASSERT_EQ(inc.invariants.size(), full.invariants.size());
            for (std::size_t v = 0; v < cfg.num_nodes; ++v) {
                EXPECT_EQ(inc.invariants[v], full.invariants[v]) << name << " point " << v;
            }
            EXPECT_GT(inc.counters.closures_incremental, 0U);
        }
    }
}

TEST(DfaAnalyze, DensityContrastAtLoopHead) {
    const Cfg loop = build_cfg(builtin("loop"));
    const Cfg fib = build_cfg(builtin("fib"));
    const Analysis la = analyze(loop);
    const Analysis fa = analyze(fib);
    EXPECT_EQ(achieved_density(*la.invariants[loop.loop_heads()[0]]), 0.0);
    EXPECT_GT(achieved_density(*fa.invariants[fib.loop_heads()[0]]), 0.0);
}

TEST(DfaAnalyze, WideningDelayBoundsVisits) {
    const Cfg cfg = build_cfg(builtin("loop"));
    for (std::size_t delay : {0U, 1U, 3U, 20U}) {
        AnalysisOptions opt;
        opt.widen_delay = delay;
        const Analysis a = analyze(cfg, opt);
        EXPECT_LT(a.counters.node_updates, 200U) << delay;
        EXPECT_EQ(a.counters.widens > 0, delay < 11) << delay;
    }
}

TEST(DfaAnalyze, RejectsNonClosureOp) { EXPECT_THROW(analyze(build_cfg(builtin("loop")), {OpId::Join}), std::invalid_argument); }

TEST(DfaReport, JsonShape) {
    const Program p = builtin("fib");
    const Analysis a = analyze(build_cfg(p), {OpId::IncMine});
    const auto doc = nlohmann::json::parse(to_json(p, a, {OpId::IncMine}, "builtin:fib"));
    EXPECT_EQ(doc["program"], "builtin:fib");
    EXPECT_EQ(doc["closure"], "inc-mine");
    EXPECT_EQ(doc["points"].size(), a.cfg.num_nodes);
    const auto& exit = doc["points"][a.cfg.exit];
    EXPECT_TRUE(exit["reachable"].get<bool>());
    EXPECT_TRUE(exit["intervals"].contains("b"));
    EXPECT_GT(doc["counters"]["closure_incremental"].get<int>(), 0);
    const std::string summary = render_summary(p, a, {OpId::IncMine});
    EXPECT_NE(summary.find("exit invariant:"), std::string::npos);
    EXPECT_NE(summary.find("  i in [10, +oo]"), std::string::npos) << summary;
}
