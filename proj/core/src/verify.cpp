// Copyright (c) octobench contributors.
// SPDX-License-Identifier: Apache-2.0
#include "octobench/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "octobench/checks.hpp"
#include "octobench/generator.hpp"
#include "octobench/oracle.hpp"

namespace octobench {

namespace {

constexpr std::size_t kept_failures = 5;
constexpr std::array densities{0.0, 0.3, 0.6, 0.9};

class Suite {
  public:
    void record(const std::string& name, bool ok, std::uint64_t seed, std::size_t n, const std::string& detail = {}) {
        auto [it, fresh] = index_.try_emplace(name, props_.size());
        if (fresh) {
            props_.push_back({name, 0, 0, {}});
        }
        PropertyResult& p = props_[it->second];
        if (ok) {
            ++p.passed;
            return;
        }
        ++p.failed;
        if (p.failures.size() < kept_failures) {
            p.failures.push_back({seed, n, detail});
        }
    }

    std::vector<PropertyResult> take() { return std::move(props_); }

  private:
    std::map<std::string, std::size_t> index_;
    std::vector<PropertyResult> props_;
};

std::string first_difference(const Octagon& got, const Octagon& want) {
    if (got.is_bottom() != want.is_bottom()) {
        return std::string("bottom verdicts differ (got ") + (got.is_bottom() ? "bottom" : "non-bottom") + ")";
    }
    if (got.is_bottom()) {
        return {};
    }
    const std::size_t d = got.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (got.at(i, j) != want.at(i, j)) {
                return "entry (" + std::to_string(i) + ", " + std::to_string(j) + "): " + got.at(i, j).to_string() +
                       " vs " + want.at(i, j).to_string();
            }
        }
    }
    return {};
}

bool same(const Octagon& a, const Octagon& b) {
    return a.is_bottom() == b.is_bottom() && (a.is_bottom() || std::equal(a.entries().begin(), a.entries().end(),
                                                                          b.entries().begin(), b.entries().end()));
}

std::size_t finite_entries(const Octagon& o) {
    return static_cast<std::size_t>(
        std::count_if(o.entries().begin(), o.entries().end(), [](Bound b) { return b.is_finite(); }));
}

Octagon build(std::size_t n, const std::vector<Constraint>& ks) {
    Octagon o = Octagon::top(n);
    for (const auto& k : ks) {
        o = add_constraint(o, k);
    }
    return o;
}

void generated_properties(Suite& s, const VerifyOptions& opt, std::uint64_t seed, std::size_t index,
                          const CheckRegistry<Octagon>& checks) {
    Rng rng{mix64(seed)};
    GeneratorParams p;
    p.n = 2 + rng.below(std::max<std::size_t>(opt.max_n, 2) - 1);
    p.density = densities[index % densities.size()];
    p.seed = seed;
    const std::size_t n = p.n;
    const Generated<Octagon> g = generate_octagon(p);
    const Octagon a = close_full(g.state);

    s.record("generator-consistency",
             !a.is_bottom() && satisfies(g.state, g.witness) && satisfies(a, g.witness) &&
                 related_pairs(g.state) == target_related_pairs(n, p.density),
             seed, n, "generated state inconsistent, witness outside, or density off");
    if (a.is_bottom()) {
        return;
    }

    // Closure under test, observed through the built-in checks.
    const Octagon under_test = close_full_faulty(g.state, opt.fault);
    const CellIdentity cell{OpId::CloseFull, DomainKind::Octagon, n, p.density, seed};
    for (const CheckReport& r :
         checks.run_checks({OpId::CloseFull, cell, g.state, nullptr, {}, {}, under_test}, CheckOptions{true})) {
        s.record(r.check, r.verdict == Verdict::Pass, seed, n, r.detail);
    }

    // Incremental variants against the full closure, with a sampled
    // tightening constraint and an arbitrary one that may empty the state.
    const Constraint tightening = sample_tightening_constraint(a, rng, g.witness, p.slack_range);
    const Constraint arbitrary = random_constraint(rng, n, {-150, 150});
    for (const Constraint& k : {tightening, arbitrary}) {
        const Octagon full = close_full_faulty(add_constraint(a, k), opt.fault);
        const Octagon mine = close_incremental_mine(a, k);
        const Octagon chaw = close_incremental_chawdhary(a, k);
        std::string detail = first_difference(mine, full);
        if (detail.empty()) {
            detail = first_difference(chaw, full);
        }
        s.record("incremental-matches-full", detail.empty(), seed, n, "constraint '" + k.to_string() + "': " + detail);
    }

    // Lattice laws on closed operands.
    GeneratorParams q = p;
    q.seed = mix64(seed + 2);
    const Octagon b = close_full(generate_octagon(q).state);
    const Octagon j = join(a, b);
    s.record("join-laws",
             j == join(b, a) && join(a, a) == a && includes(j, a) && includes(j, b) && is_strongly_closed(j), seed,
             n, "join not commutative, idempotent, an upper bound, or closed");
    const Octagon m = close_full(meet(a, b));
    s.record("meet-laws",
             includes(a, m) && includes(b, m) && equals(close_full(meet(a, Octagon::top(n))), a) &&
                 equals(close_full(meet(a, a)), a),
             seed, n, "meet is not a lower bound or top/self is not neutral");
    s.record("includes-order",
             includes(a, a) && includes(Octagon::top(n), a) && includes(a, Octagon::bottom(n)) &&
                 (!(includes(a, b) && includes(b, a)) || equals(a, b)),
             seed, n, "includes is not a partial order with top and bottom");

    // Widening: an ascending chain stabilises within (#finite entries + 1) steps.
    {
        Octagon current = a;
        const std::size_t limit = finite_entries(a) + 1;
        std::size_t steps = 0;
        bool ok = true;
        for (;;) {
            std::vector<Constraint> grown;
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t v = rng.below(n);
                grown.push_back(Constraint::upper(v, g.witness[v] + rng.uniform(0, 400)));
                grown.push_back(Constraint::lower(v, g.witness[v] - rng.uniform(0, 400)));
            }
            const Octagon next = join(current, close_full(build(n, grown)));
            const Octagon widened = widen(current, next);
            ++steps;
            if (widened == current) {
                break;
            }
            current = widened;
            if (steps > limit) {
                ok = false;
                break;
            }
        }
        s.record("widening-termination", ok, seed, n,
                 "chain still growing after " + std::to_string(steps) + " steps (limit " + std::to_string(limit) + ")");
    }

    // Forget: sound projection that clears every entry of the variable.
    {
        const std::size_t v = rng.below(n);
        const Octagon f = forget(a, v);
        std::vector<std::int64_t> moved = g.witness;
        moved[v] += 100000;
        bool cleared = true;
        for (std::size_t k = 0; k < f.dim(); ++k) {
            for (const std::size_t r : {2 * v, 2 * v + 1}) {
                cleared = cleared && (k == r || (f.at(r, k).is_infinite() && f.at(k, r).is_infinite()));
            }
        }
        s.record("forget-soundness", cleared && includes(f, a) && is_strongly_closed(f) && satisfies(f, moved), seed,
                 n, "forget kept an entry, lost a point, or broke closure");
    }
}

void oracle_properties(Suite& s, const VerifyOptions& opt, std::uint64_t seed) {
    constexpr std::int64_t box = 24;
    Rng rng{mix64(seed ^ 0x5EEDULL)};
    const std::size_t n = 1 + rng.below(std::min<std::size_t>(3, std::max<std::size_t>(opt.max_n, 1)));
    std::vector<Constraint> ks;
    const std::size_t count = 1 + rng.below(2 * n + 2);
    for (std::size_t k = 0; k < count; ++k) {
        ks.push_back(random_constraint(rng, n, {-8, 8}));
    }
    const Octagon in = build(n, ks);
    const Octagon got = close_full_faulty(in, opt.fault);
    const Octagon want = oracle::closure_by_enumeration(n, ks, box);
    std::string detail = first_difference(got, want);
    if (detail.empty() && !got.is_bottom() && !oracle::same_points(in, got, box)) {
        detail = "closure changed the integer point set";
    }
    s.record("oracle-closure", detail.empty(), seed, n, detail);

    const Octagon a = close_full(in);
    if (!a.is_bottom()) {
        const std::size_t v = rng.below(n);
        const Octagon f = forget(a, v);
        bool ok = true;
        oracle::for_each_point(n, 10, [&](std::span<const std::int64_t> pt) {
            std::vector<std::int64_t> q(pt.begin(), pt.end());
            bool projected = false;
            for (std::int64_t x = -3 * box; x <= 3 * box && !projected; ++x) {
                q[v] = x;
                projected = oracle::member(a, q);
            }
            ok = ok && projected == oracle::member(f, pt);
        });
        s.record("oracle-forget", ok, seed, n, "forget differs from the integer projection of x" + std::to_string(v));
    }

    std::vector<Constraint> ks2;
    for (std::size_t k = 0; k < count; ++k) {
        ks2.push_back(random_constraint(rng, n, {-8, 8}));
    }
    const Octagon b = close_full(build(n, ks2));
    s.record("oracle-includes", includes(a, b) == oracle::subset_points(b, a, box), seed, n,
             "includes disagrees with the integer subset test");
    if (!a.is_bottom() && !b.is_bottom()) {
        const Octagon j = join(a, b);
        const auto in_union = [&](std::span<const std::int64_t> pt) {
            return oracle::member(a, pt) || oracle::member(b, pt);
        };
        s.record("oracle-join", same(j, oracle::to_octagon(oracle::tight_bounds(n, in_union, box))), seed, n,
                 "join is not the octagonal hull of the union");
    }
}

} // namespace

std::size_t VerifyReport::total_passed() const noexcept {
    std::size_t t = 0;
    for (const auto& p : properties) {
        t += p.passed;
    }
    return t;
}

std::size_t VerifyReport::total_failed() const noexcept {
    std::size_t t = 0;
    for (const auto& p : properties) {
        t += p.failed;
    }
    return t;
}

const PropertyResult* VerifyReport::find(const std::string& name) const noexcept {
    for (const auto& p : properties) {
        if (p.name == name) {
            return &p;
        }
    }
    return nullptr;
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.seeds == 0) {
        throw std::invalid_argument("verify needs at least one seed");
    }
    if (options.max_n == 0) {
        throw std::invalid_argument("max-n must be at least 1");
    }
    const CheckRegistry<Octagon> checks = CheckRegistry<Octagon>::with_builtins();
    Suite suite;
    for (std::size_t s = 0; s < options.seeds; ++s) {
        const std::uint64_t seed = options.base_seed + s;
        generated_properties(suite, options, seed, s, checks);
        if (options.oracle) {
            oracle_properties(suite, options, seed);
        }
    }
    return {options, suite.take()};
}

std::string render_verify(const VerifyReport& r) {
    std::ostringstream os;
    os << "verify  seeds=" << r.options.seeds << "  max-n=" << r.options.max_n << "  base-seed=" << r.options.base_seed
       << "  oracle=" << (r.options.oracle ? "on" : "off")
       << (r.options.fault == ClosureFault::SkipStrengthening ? "  mutation=skip-strengthening" : "") << '\n';
    for (const PropertyResult& p : r.properties) {
        os << (p.failed == 0 ? "PASS  " : "FAIL  ") << p.name << "  " << p.passed << " passed, " << p.failed
           << " failed\n";
        for (const PropertyFailure& f : p.failures) {
            os << "      seed=" << f.seed << " n=" << f.n << ": " << f.detail << '\n';
        }
    }
    os << "total: " << r.total_passed() << " passed, " << r.total_failed() << " failed\n";
    return os.str();
}

} // namespace octobench
