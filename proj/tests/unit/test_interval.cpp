#include "mitl/interval_set.hpp"
#include "mitl/random_gen.hpp"

#include <doctest.h>

using namespace mitl;

namespace {

Rational rat(const char* s) { return Rational::parse(s); }

Interval itv(const char* s) { return Interval::parse(s); }

// Small random interval over [0, 10] with occasional infinities.
Interval random_test_interval(Rng& rng, bool nonneg_only) {
    const Rational lo(static_cast<long>(rng.below(21)), 2);
    if (rng.chance(1, 8)) return Interval(TimeBound(lo), TimeBound::pos_inf(), rng.chance(1, 2), false);
    const Rational hi = lo + Rational(static_cast<long>(rng.below(9)), 2);
    Interval out(TimeBound(lo), TimeBound(hi), rng.chance(1, 2), rng.chance(1, 2));
    if (!nonneg_only && rng.chance(1, 4)) out = out.shift(Rational(-3));
    return out;
}

IntervalSet random_test_set(Rng& rng, bool nonneg_only = true) {
    std::vector<Interval> members;
    const int n = static_cast<int>(rng.below(4));
    for (int k = 0; k < n; ++k) members.push_back(random_test_interval(rng, nonneg_only));
    return IntervalSet::of(std::move(members));
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
    CHECK(rat("1/2") + rat("1/3") == rat("5/6"));
    CHECK(rat("0.01") == rat("1/100"));
    CHECK(rat("5.1") == rat("51/10"));
    CHECK(rat("-3/6") == rat("-1/2"));
    CHECK(rat("2/4").str() == "1/2");
    CHECK(rat("7").str() == "7");
    CHECK(Rational(7, -2) == rat("-7/2"));
    CHECK(rat("7/2").floor() == Rational(3));
    CHECK(rat("7/2").ceil() == Rational(4));
    CHECK(rat("-7/2").ceil() == Rational(-3));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("monus") {
    CHECK(monus(rat("5"), rat("3")) == rat("2"));
    CHECK(monus(rat("1"), rat("4")) == rat("0"));
    Rng rng(7);
    for (int k = 0; k < 100; ++k) {
        const Rational x(static_cast<long>(rng.below(1000)), 7);
        CHECK(monus(x, x) == Rational(0));
    }
}

TEST_CASE("interval inf/sup/width") {
    const Interval i = itv("[1,2]");
    CHECK(i.inf() == TimeBound(rat("1")));
    CHECK(i.sup() == TimeBound(rat("2")));
    CHECK(i.width() == TimeBound(rat("1")));

    const Interval none = Interval::empty();
    CHECK(none.inf() == TimeBound::pos_inf());
    CHECK(none.sup() == TimeBound::neg_inf());
    CHECK(none.width() == TimeBound::neg_inf());

    const Interval point = itv("[3,3]");
    CHECK(point.inf() == TimeBound(rat("3")));
    CHECK(point.sup() == TimeBound(rat("3")));
    CHECK(point.width() == TimeBound(rat("0")));
    CHECK(point.is_singleton());
}

TEST_CASE("interval construction normalizes") {
    CHECK(itv("(1,1)").is_empty());
    CHECK(itv("(2,1)").is_empty());
    CHECK(itv("(1,1)") == Interval::empty());
    CHECK(itv("[0,inf]").hi_closed() == false);  // infinite endpoints forced open
    CHECK(itv("[0,inf)") == Interval::nonneg());
    CHECK_THROWS_AS(Interval::parse("[1;2]"), std::invalid_argument);
    CHECK_THROWS_AS(Interval::parse("1,2"), std::invalid_argument);
}

TEST_CASE("interval variants") {
    const Interval i = itv("(1,2]");
    CHECK(i.open_core() == itv("(1,2)"));
    CHECK(i.close_left() == itv("[1,2]"));
    CHECK(i.open_r_close_l() == itv("[1,2)"));
    CHECK(i.open_l_close_r() == itv("(1,2]"));

    const Interval point = itv("[0,0]");
    CHECK(point.open_core().is_empty());
    CHECK(point.close_left() == point);
    CHECK(point.open_r_close_l().is_empty());

    const Interval ray = itv("(0,inf)");
    CHECK(ray.close_left() == itv("[0,inf)"));
    CHECK(ray.open_l_close_r() == ray);
    CHECK(Interval::empty().close_left().is_empty());
}

TEST_CASE("set algebra golden cases") {
    const IntervalSet comp = IntervalSet(itv("(1,2)")).complement_within_nonneg();
    CHECK(comp == IntervalSet{itv("[0,1]"), itv("[2,inf)")});

    CHECK(IntervalSet{itv("[0,1]"), itv("[1,2]")} == IntervalSet(itv("[0,2]")));
    CHECK(IntervalSet{itv("[0,1)"), itv("(1,2]")}.size() == 2);

    // Minkowski sum oracle: t is in {3} + (0,2) iff t - 3 is in (0,2).
    const IntervalSet sum = IntervalSet(itv("[3,3]")).minkowski_add(itv("(0,2)"));
    CHECK(sum == IntervalSet(itv("(3,5)")));
    for (long num = 20; num <= 48; ++num) {
        const Rational t(num, 8);
        CHECK(sum.contains(t) == itv("(0,2)").contains(t - rat("3")));
    }
}

TEST_CASE("eps_ball") {
    CHECK(eps_ball({rat("0"), rat("2")}, rat("1/2")) ==
          IntervalSet{itv("[-1/2,1/2]"), itv("[3/2,5/2]")});
    CHECK(eps_ball({}, rat("1")).is_empty());

    const IntervalSet merged = eps_ball({rat("0"), rat("1")}, rat("1/2"));
    CHECK(merged == IntervalSet(itv("[-1/2,3/2]")));
    // Pointwise membership oracle.
    for (long num = -10; num <= 20; ++num) {
        const Rational t(num, 8);
        const bool in_ball = (t - rat("0")).abs() <= rat("1/2") || (t - rat("1")).abs() <= rat("1/2");
        CHECK(merged.contains(t) == in_ball);
    }
    CHECK_THROWS_AS(eps_ball({rat("0")}, rat("-1")), std::invalid_argument);
}

TEST_CASE("canonicalization is idempotent") {
    Rng rng(11);
    for (int k = 0; k < 500; ++k) {
        const IntervalSet s = random_test_set(rng, false);
        CHECK(IntervalSet::of(s.members()) == s);
    }
}

TEST_CASE("De Morgan over randomized sets") {
    Rng rng(12);
    for (int k = 0; k < 300; ++k) {
        const IntervalSet a = random_test_set(rng);
        const IntervalSet b = random_test_set(rng);
        const IntervalSet lhs = a.union_with(b).complement_within_nonneg();
        const IntervalSet rhs = a.complement_within_nonneg().intersect(b.complement_within_nonneg());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("membership is consistent with the set operations") {
    Rng rng(13);
    for (int k = 0; k < 300; ++k) {
        const IntervalSet a = random_test_set(rng);
        const IntervalSet b = random_test_set(rng);
        const Rational t(static_cast<long>(rng.below(200)), 16);
        CHECK(a.union_with(b).contains(t) == (a.contains(t) || b.contains(t)));
        CHECK(a.intersect(b).contains(t) == (a.contains(t) && b.contains(t)));
        CHECK(a.complement_within_nonneg().contains(t) == !a.contains(t));
        CHECK(a.set_minus(b).contains(t) == (a.contains(t) && !b.contains(t)));
        CHECK(a.symmetric_difference(b).contains(t) == (a.contains(t) != b.contains(t)));
    }
}

TEST_CASE("shifting back and forth is the identity") {
    Rng rng(14);
    for (int k = 0; k < 200; ++k) {
        const IntervalSet s = random_test_set(rng);
        const Rational r(static_cast<long>(rng.below(40)), 4);
        CHECK(s.shift_by(r).shift_by(-r) == s);
    }
}

TEST_CASE("width characterizes empty and singleton") {
    Rng rng(15);
    const TimeBound zero{Rational(0)};
    for (int k = 0; k < 400; ++k) {
        const Interval i = random_test_interval(rng, false);
        CHECK((i.width() < zero) == i.is_empty());
        CHECK((i.width() == zero) == i.is_singleton());
    }
}

TEST_CASE("fit_shifts matches pointwise containment") {
    Rng rng(16);
    for (int k = 0; k < 300; ++k) {
        const Interval target = random_test_interval(rng, false);
        const Interval piece = random_test_interval(rng, true);
        const Interval shifts = fit_shifts(target, piece);
        const Rational t(static_cast<long>(rng.below(120)) - 40, 8);
        const bool expected = piece.is_empty() || target.contains(piece.shift(t));
        CHECK(shifts.contains(t) == expected);
    }
}
