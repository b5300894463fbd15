#include "mitl/random_gen.hpp"
#include "mitl/witness.hpp"

#include <doctest.h>

using namespace mitl;

namespace {

Interval itv(const char* s) { return Interval::parse(s); }

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");

Signal staircase() {
    // p on [0,2], q on (1,2], nothing afterwards.
    return Signal::validate({
        {itv("[0,1]"), {"p"}},
        {itv("(1,2]"), {"p", "q"}},
        {itv("(2,inf)"), {}},
    });
}

// Probe points of an interval set: breakpoints, midpoints of members, and a
// representative beyond the last member when unbounded.
std::vector<Rational> probes_of(const IntervalSet& s) {
    std::vector<Rational> out;
    for (const Interval& m : s.members()) {
        if (m.lo().is_finite() && m.lo_closed()) out.push_back(m.lo().finite());
        if (m.hi().is_finite() && m.hi_closed()) out.push_back(m.hi().finite());
        if (m.lo().is_finite() && m.hi().is_finite()) {
            out.push_back(midpoint(m.lo().finite(), m.hi().finite()));
        } else if (m.lo().is_finite()) {
            out.push_back(m.lo().finite() + Rational(1));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("step size") {
    CHECK(step_size(itv("[3,4]")) == Rational(1));
    CHECK(step_size(itv("[1,2]")) == Rational(1));
    CHECK(step_size(itv("[1/100,1/50]")) == Rational(1, 100));
    CHECK_THROWS_AS(step_size(itv("[0,2]")), std::invalid_argument);
    CHECK_THROWS_AS(step_size(itv("[1,inf)")), std::invalid_argument);
    CHECK_THROWS_AS(step_size(Interval::empty()), std::invalid_argument);
}

TEST_CASE("clock bounds") {
    auto check_bound = [](const char* s, long obligations, long until_clocks, long conservative) {
        const ClockBound b = clock_bound(itv(s));
        CHECK(b.obligations == Rational(obligations));
        CHECK(b.until_clock_bound == Rational(until_clocks));
        CHECK(b.conservative_bound == Rational(conservative));
    };
    check_bound("[1,2]", 2, 4, 8);
    check_bound("[1/100,1/50]", 2, 4, 8);
    check_bound("[3,4]", 4, 8, 16);
    // Doubling intervals keep a constant obligation count.
    for (long n : {1L, 5L, 1000L}) {
        const Interval i(TimeBound(Rational(n)), TimeBound(Rational(2 * n)), true, true);
        CHECK(clock_bound(i).obligations == Rational(2));
    }
}

TEST_CASE("until witnesses") {
    const Signal both = Signal::constant({"p", "q"});
    CHECK(until_witness_holds(both, p, q, Rational(0), Rational(0), 1));

    const Signal f = staircase();
    CHECK(until_witness_holds(f, p, q, Rational(0), Rational(3, 2), 1));
    // Oracle confirmation of the three conjuncts of kind 1.
    CHECK(oracle_sat(f, q, Rational(3, 2), Semantics::New));
    for (long num = 1; num < 12; ++num) {
        CHECK(oracle_sat(f, p, Rational(num, 8), Semantics::New));
    }

    // Kind 2 fails when q holds on no left neighborhood of w.
    CHECK_FALSE(until_witness_holds(f, p, q, Rational(0), Rational(1, 2), 2));
    CHECK(until_witness_holds(f, p, q, Rational(0), Rational(3, 2), 2));
    CHECK_THROWS_AS(until_witness_holds(f, p, q, Rational(0), Rational(1), 7), std::invalid_argument);
}

TEST_CASE("until proof sets") {
    const Signal f = staircase();
    // A failed witness gives an empty proof set.
    CHECK(until_proof_set(f, p, q, Rational(0), Rational(1, 2), itv("[1,2]"), 1).is_empty());

    const IntervalSet ps = until_proof_set(f, p, q, Rational(0), Rational(3, 2), itv("[1,2]"), 1);
    CHECK(ps == IntervalSet(itv("[0,1/2]")));

    // Soundness: every probe of a proof set satisfies the Until formula.
    const Formula u = Formula::until(p, q, itv("[1,2]"));
    for (const Rational& t : probes_of(ps)) {
        CHECK(oracle_sat(f, u, t, Semantics::New));
    }
}

TEST_CASE("until partition on the staircase") {
    const UntilPartition part = until_partition(staircase(), p, q, itv("[1,2]"));
    REQUIRE(part.ok);
    CHECK(part.step == Rational(1));
    CHECK(part.truth == IntervalSet(itv("[0,1)")));
    CHECK(part.parts[0] == itv("[0,1)"));
    CHECK(part.parts[1].is_empty());
    REQUIRE(part.witnesses[0].has_value());
    CHECK_FALSE(part.witnesses[1].has_value());
    CHECK(part.witnesses[0]->kind == 1);
    CHECK(part.witnesses[0]->r == Rational(0));
    CHECK(part.witnesses[0]->w == Rational(2));
}

TEST_CASE("until partition is empty when the right operand never holds") {
    const Signal f = Signal::constant({"p"});
    const UntilPartition part = until_partition(f, p, q, itv("[1,2]"));
    REQUIRE(part.ok);
    CHECK(part.truth.is_empty());
    CHECK(part.parts[0].is_empty());
    CHECK(part.parts[1].is_empty());
}

TEST_CASE("release witnesses") {
    const Signal f = staircase();
    CHECK(release_witness_holds(f, p, q, Interval::empty(), 1));
    CHECK(release_witness_holds(f, p, q, itv("(1,2]"), 1));   // q throughout
    CHECK_FALSE(release_witness_holds(f, p, q, itv("[1,2]"), 1));
    CHECK(release_witness_holds(f, p, q, itv("[0,2]"), 2));   // p throughout, left-closed
    CHECK_FALSE(release_witness_holds(f, p, q, itv("(0,2]"), 2));
    // Kind 3 needs p exactly at the supremum.
    CHECK(release_witness_holds(f, p, q, itv("(1,2]"), 3));
    CHECK_FALSE(release_witness_holds(f, q, q, itv("(1,3]"), 3));
    CHECK_THROWS_AS(release_witness_holds(f, p, q, itv("[1,2]"), 5), std::invalid_argument);
}

TEST_CASE("release proof sets") {
    const Signal f = staircase();
    CHECK(release_proof_set(f, p, q, itv("[1,2]"), itv("[1,2]"), 1).is_empty());  // witness fails

    const Signal both = Signal::constant({"p", "q"});
    // {t : [t+1, t+2] inside [1,4]} = [0,2].
    CHECK(release_proof_set(both, p, q, itv("[1,4]"), itv("[1,2]"), 1) == IntervalSet(itv("[0,2]")));

    // Soundness of every kind against the oracle.
    const Formula r = Formula::release(p, q, itv("[1,2]"));
    for (int kind = 1; kind <= 4; ++kind) {
        const IntervalSet ps = release_proof_set(f, p, q, itv("(1,2]"), itv("[1,2]"), kind);
        for (const Rational& t : probes_of(ps)) {
            CAPTURE(kind);
            CAPTURE(t.str());
            CHECK(oracle_sat(f, r, t, Semantics::New));
        }
    }
}

TEST_CASE("release partition of a constant signal") {
    const ReleasePartition part = release_partition(Signal::constant({"p", "q"}), p, q, itv("[1,2]"));
    REQUIRE(part.ok);
    CHECK(part.step == Rational(1));
    CHECK(part.truth == IntervalSet(itv("[0,1)")));
    IntervalSet joined;
    for (const Interval& t : part.parts) joined = joined.union_with(IntervalSet(t));
    CHECK(joined == part.truth);
}

TEST_CASE("release partition is empty without any support") {
    // q never holds and p cannot rescue: the release fails everywhere.
    const Signal f = Signal::constant({});
    const ReleasePartition part = release_partition(f, p, q, itv("[1,2]"));
    REQUIRE(part.ok);
    CHECK(part.truth.is_empty());
}

TEST_CASE("randomized partitions decompose and are covered by their witnesses") {
    Rng rng(51);
    for (int k = 0; k < 150; ++k) {
        const Signal f = random_signal(rng.next(), 5, Rational(6), {"p", "q"});
        const Formula a = random_formula(rng, 2, {"p", "q"});
        const Formula b = random_formula(rng, 2, {"p", "q"});
        const Interval i = random_bounded_positive_interval(rng);

        const UntilPartition up = until_partition(f, a, b, i);
        CAPTURE(f.str());
        CAPTURE(a.str());
        CAPTURE(b.str());
        CAPTURE(i.str());
        REQUIRE(up.ok);
        for (int s = 0; s < 2; ++s) {
            if (up.parts[s].is_empty()) continue;
            REQUIRE(up.witnesses[s].has_value());
            const UntilWitness& w = *up.witnesses[s];
            CHECK((s == 0 ? (w.kind == 1 || w.kind == 2) : (w.kind == 1 || w.kind == 3)));
            CHECK(until_proof_set(f, a, b, w.r, w.w, i, w.kind).contains_interval(up.parts[s]));
        }

        const ReleasePartition rp = release_partition(f, a, b, i);
        REQUIRE(rp.ok);
        IntervalSet joined;
        for (int s = 0; s < 4; ++s) {
            joined = joined.union_with(IntervalSet(rp.parts[s]));
            if (rp.parts[s].is_empty()) continue;
            REQUIRE(rp.witnesses[s].has_value());
            const ReleaseWitness& w = *rp.witnesses[s];
            CHECK(release_proof_set(f, a, b, w.interval, i, w.kind).contains_interval(rp.parts[s]));
        }
        CHECK(joined == rp.truth);
    }
}
