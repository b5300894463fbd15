#include "mitl/eval.hpp"
#include "mitl/random_gen.hpp"

#include <doctest.h>

using namespace mitl;

namespace {

Interval itv(const char* s) { return Interval::parse(s); }

Signal ex2_signal() {
    return Signal::validate({{itv("[0,1]"), {"p"}}, {itv("(1,inf)"), {"q"}}});
}

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");

}  // namespace

TEST_CASE("truth sets of the running counterexample") {
    const Signal f = ex2_signal();
    const Formula until = Formula::until(p, q, itv("(0,2)"));
    const Formula release =
        Formula::release(Formula::negation(p), Formula::negation(q), itv("(0,2)"));

    CHECK(truth_set(f, until, Semantics::Old).is_empty());
    CHECK(truth_set(f, until, Semantics::New).is_empty());
    CHECK(truth_set(f, release, Semantics::Old).is_empty());
    CHECK(truth_set(f, release, Semantics::New).contains(Rational(0)));
    CHECK(truth_set(f, Formula::top(), Semantics::Old) == IntervalSet::nonneg());
}

TEST_CASE("satisfaction at zero") {
    const Signal f = ex2_signal();
    CHECK(sat(f, Formula::negation(Formula::until(p, q, itv("(0,2)"))), Semantics::Old));
    CHECK(sat(f, Formula::release(Formula::negation(p), Formula::negation(q), itv("(0,2)")),
              Semantics::New));
    CHECK_FALSE(sat(f, Formula::bottom(), Semantics::Old));
    CHECK_FALSE(sat(f, Formula::bottom(), Semantics::New));
}

TEST_CASE("oracle basics") {
    const Signal f = ex2_signal();
    CHECK(oracle_sat(f, p, Rational(0), Semantics::Old) == (f.value_at(Rational(0)).count("p") > 0));
    CHECK_FALSE(oracle_sat(f, Formula::until(p, q, itv("(0,2)")), Rational(0), Semantics::Old));
    CHECK(oracle_sat(f, Formula::release(Formula::negation(p), Formula::negation(q), itv("(0,2)")),
                     Rational(0), Semantics::New));
}

TEST_CASE("empty decorations") {
    const Signal f = ex2_signal();
    const Interval none = Interval::empty();
    CHECK(truth_set(f, Formula::until(p, q, none), Semantics::New).is_empty());
    CHECK(truth_set(f, Formula::release(p, q, none), Semantics::New) == IntervalSet::nonneg());
    CHECK(truth_set(f, Formula::release(p, q, none), Semantics::Old) == IntervalSet::nonneg());
}

TEST_CASE("next operator truth sets") {
    CHECK(next_truth_set(IntervalSet(itv("[0,1]"))) == IntervalSet(itv("[0,1)")));
    CHECK(next_truth_set(IntervalSet(itv("(1,3)"))) == IntervalSet(itv("[1,3)")));
    CHECK(next_truth_set(IntervalSet::empty_set()).is_empty());
    CHECK(next_truth_set(IntervalSet(itv("[2,2]"))).is_empty());

    // Derived oracle: membership in the next set means a whole open interval
    // just to the right lies inside the set.
    Rng rng(41);
    for (int k = 0; k < 300; ++k) {
        std::vector<Interval> members;
        for (int m = 0; m < 3; ++m) {
            const Rational lo(static_cast<long>(rng.below(16)), 2);
            const Rational hi = lo + Rational(static_cast<long>(rng.below(6)), 2);
            members.push_back(Interval(TimeBound(lo), TimeBound(hi), rng.chance(1, 2), rng.chance(1, 2)));
        }
        const IntervalSet s = IntervalSet::of(members);
        const IntervalSet next = next_truth_set(s);
        std::vector<Rational> probes = s.breakpoints();
        probes.push_back(Rational(static_cast<long>(rng.below(40)), 4));
        for (const Rational& t : probes) {
            // Small enough eps: half the gap to the next breakpoint.
            Rational eps{1};
            for (const Rational& b : s.breakpoints()) {
                if (b > t) {
                    eps = mitl::min(eps, (b - t) * Rational(1, 2));
                    break;
                }
            }
            const bool expected = s.contains_open(TimeBound(t), TimeBound(t + eps));
            CHECK(next.contains(t) == expected);
        }
    }
}

TEST_CASE("finite variability holds at every point of a finite union") {
    CHECK(fvar_at(IntervalSet{itv("[0,1]"), itv("[2,3]")}, Rational(1), Side::Right));
    CHECK(fvar_at(IntervalSet(itv("(1,2)")), Rational(1), Side::Right));
    CHECK_THROWS_AS(fvar_at(IntervalSet(itv("(1,2)")), Rational(0), Side::Left), std::invalid_argument);

    Rng rng(42);
    for (int k = 0; k < 200; ++k) {
        std::vector<Interval> members;
        for (int m = 0; m < 3; ++m) {
            const Rational lo(static_cast<long>(rng.below(16)), 2);
            members.push_back(Interval(TimeBound(lo), TimeBound(lo + Rational(1, 2)),
                                       rng.chance(1, 2), rng.chance(1, 2)));
        }
        const IntervalSet s = IntervalSet::of(members);
        for (const Rational& b : s.breakpoints()) {
            CHECK(fvar_at(s, b, Side::Right));
            if (b.is_positive()) CHECK(fvar_at(s, b, Side::Left));
        }
    }
}

TEST_CASE("duality breaks under the old semantics and holds under the new one") {
    const Signal f = ex2_signal();
    const Formula phi = Formula::negation(Formula::until(p, q, itv("(0,2)")));

    const DualityReport old_rep = duality_check(f, phi, Semantics::Old);
    CHECK_FALSE(old_rep.equal);
    CHECK(old_rep.mismatch == IntervalSet::nonneg());

    const DualityReport new_rep = duality_check(f, phi, Semantics::New);
    CHECK(new_rep.equal);

    // Without negations the normal form is the formula itself.
    const Formula pos = Formula::until(p, q, itv("(0,2)"));
    CHECK(duality_check(f, pos, Semantics::Old).equal);
    CHECK(duality_check(f, pos, Semantics::New).equal);
}

TEST_CASE("the rewriting bridge on the counterexample") {
    const Signal f = ex2_signal();
    const Formula release =
        Formula::release(Formula::negation(p), Formula::negation(q), itv("(0,2)"));
    CHECK(bridge_check(f, release).equal);
    CHECK(bridge_check(f, p).equal);
}

TEST_CASE("randomized duality, bridge and oracle agreement") {
    Rng rng(43);
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
        const Signal f = random_signal(rng.next(), 5, Rational(6), {"p", "q"});
        const Formula phi = random_formula(rng, 3, {"p", "q"});
        ++checked;

        const DualityReport dual = duality_check(f, phi, Semantics::New);
        CHECK(dual.equal);

        const BridgeReport bridge = bridge_check(f, phi);
        CHECK(bridge.equal);

        for (Semantics sem : {Semantics::Old, Semantics::New}) {
            const AgreementReport agreement = engine_oracle_agreement(f, phi, sem);
            if (!agreement.agree) {
                CAPTURE(f.str());
                CAPTURE(phi.str());
                CAPTURE(semantics_name(sem));
                CAPTURE(agreement.first_disagreement->str());
            }
            CHECK(agreement.agree);
        }
    }
    CHECK(checked == 200);
}

TEST_CASE("the N operator agrees with the next of the truth set") {
    Rng rng(44);
    for (int k = 0; k < 150; ++k) {
        const Signal f = random_signal(rng.next(), 5, Rational(6), {"p", "q"});
        const Formula phi = random_formula(rng, 2, {"p", "q"});
        for (Semantics sem : {Semantics::Old, Semantics::New}) {
            const IntervalSet base = truth_set(f, phi, sem);
            const IntervalSet via_n = truth_set(f, Formula::op_n(phi), sem);
            CHECK(via_n == next_truth_set(base));

            // Any positive bound gives the same operator.
            const Rational bound(static_cast<long>(1 + rng.below(8)), 2);
            const Formula bounded = Formula::release(phi, phi, Interval::open(Rational(0), bound));
            CHECK(truth_set(f, bounded, sem) == via_n);
        }
    }
}

TEST_CASE("the one-sided variability counterexample is unsatisfiable in NNF form") {
    // (N q) and (!p R (0,1) !q) and (p R (0,1) !q)
    const Formula phi = Formula::conjunction(
        Formula::conjunction(
            Formula::op_n(q),
            Formula::release(Formula::negation(p), Formula::negation(q), itv("(0,1)"))),
        Formula::release(p, Formula::negation(q), itv("(0,1)")));
    Rng rng(45);
    for (int k = 0; k < 300; ++k) {
        const Signal f = random_signal(rng.next(), 6, Rational(4), {"p", "q"});
        CHECK(truth_set(f, phi, Semantics::Old).is_empty());
        CHECK(truth_set(f, phi, Semantics::New).is_empty());
    }
}

TEST_CASE("until truth sets are the same under both semantics") {
    Rng rng(46);
    for (int k = 0; k < 150; ++k) {
        const Signal f = random_signal(rng.next(), 5, Rational(6), {"p", "q"});
        const Formula phi = Formula::until(random_formula(rng, 2, {"p", "q"}),
                                           random_formula(rng, 2, {"p", "q"}), random_decoration(rng));
        CHECK(truth_set(f, phi, Semantics::Old) == truth_set(f, phi, Semantics::New));
    }
}
