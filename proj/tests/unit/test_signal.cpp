#include "mitl/random_gen.hpp"
#include "mitl/signal.hpp"

#include <doctest.h>

using namespace mitl;

namespace {

Interval itv(const char* s) { return Interval::parse(s); }

Signal ex2_signal() {
    // p on [0,1], q on (1,inf): the running counterexample signal.
    return Signal::validate({{itv("[0,1]"), {"p"}}, {itv("(1,inf)"), {"q"}}});
}

}  // namespace

TEST_CASE("validation accepts a proper partition") {
    const Signal f = ex2_signal();
    CHECK(f.segments().size() == 2);
    CHECK(f.props() == std::set<std::string>{"p", "q"});
}

TEST_CASE("validation diagnoses gaps, overlaps and bad tails") {
    auto expect_kind = [](std::vector<Signal::Segment> raw, SignalError::Kind kind) {
        try {
            Signal::validate(std::move(raw));
            CHECK(false);
        } catch (const SignalError& e) {
            CHECK(e.kind == kind);
        }
    };
    expect_kind({{itv("[0,1]"), {"p"}}, {itv("(2,inf)"), {"q"}}}, SignalError::Kind::Gap);
    expect_kind({{itv("[0,1]"), {"p"}}, {itv("(1,2)"), {"q"}}, {itv("[2,inf)"), {}}, {itv("[0,inf)"), {}}},
                SignalError::Kind::Overlap);
    expect_kind({{itv("[0,1]"), {"p"}}, {itv("[1,inf)"), {"q"}}}, SignalError::Kind::Overlap);
    expect_kind({{itv("(0,1]"), {"p"}}, {itv("(1,inf)"), {"q"}}}, SignalError::Kind::NotCoveringZero);
    expect_kind({{itv("[0,1]"), {"p"}}}, SignalError::Kind::MissingTail);
}

TEST_CASE("adjacent segments with equal values merge") {
    const Signal f = Signal::validate({{itv("[0,1]"), {"p"}}, {itv("[1,inf)"), {"p"}}});
    CHECK(f.segments().size() == 1);
    CHECK(f.segments()[0].first == itv("[0,inf)"));
    CHECK(f == Signal::constant({"p"}));
}

TEST_CASE("value_at picks the unique segment") {
    const Signal f = ex2_signal();
    CHECK(f.value_at(Rational(1)) == std::set<std::string>{"p"});
    CHECK(f.value_at(Rational(3, 2)) == std::set<std::string>{"q"});
    CHECK(f.value_at(Rational(0)) == std::set<std::string>{"p"});
    CHECK_THROWS_AS(f.value_at(Rational(-1)), SignalError);
}

TEST_CASE("shift") {
    const Signal f = ex2_signal();
    CHECK(f.shift(Rational(0)) == f);

    const Signal g = f.shift(Rational(1));
    REQUIRE(g.segments().size() == 2);
    CHECK(g.segments()[0].first == itv("[0,0]"));
    CHECK(g.segments()[0].second == std::set<std::string>{"p"});
    CHECK(g.segments()[1].first == itv("(0,inf)"));

    // Pointwise oracle at sampled rationals.
    Rng rng(31);
    for (int k = 0; k < 50; ++k) {
        const Rational t(static_cast<long>(rng.below(64)), 16);
        CHECK(g.value_at(t) == f.value_at(t + Rational(1)));
    }

    CHECK(f.shift(Rational(5)) == Signal::constant({"q"}));
    CHECK_THROWS_AS(f.shift(Rational(-1)), SignalError);
}

TEST_CASE("atom truth sets") {
    const Signal f = ex2_signal();
    CHECK(f.atom_truth_set("p") == IntervalSet(itv("[0,1]")));
    CHECK(f.atom_truth_set("q") == IntervalSet(itv("(1,inf)")));
    CHECK(f.atom_truth_set("nope").is_empty());

    // The atom's truth set and its complement partition the time line.
    const IntervalSet joined =
        f.atom_truth_set("p").union_with(f.atom_truth_set("p").complement_within_nonneg());
    CHECK(joined == IntervalSet::nonneg());
}

TEST_CASE("random signals are reproducible and valid") {
    CHECK(random_signal(1, 1, Rational(10), {"p"}).segments().size() == 1);
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const Signal f = random_signal(seed, 6, Rational(8), {"p", "q"});
        const Signal g = random_signal(seed, 6, Rational(8), {"p", "q"});
        CHECK(f == g);  // determinism; validate ran inside random_signal
        CHECK(f.segments().back().first.hi().is_pos_inf());
    }
}

TEST_CASE("json round trip") {
    const Signal f = ex2_signal();
    const std::string text = f.to_json_text();
    CHECK(Signal::from_json_text(text) == f);
    CHECK(Signal::from_json_text(R"([{"interval":"[0,1]","props":["p"]},
                                     {"interval":"(1,inf)","props":["q"]}])") == f);
    CHECK_THROWS_AS(Signal::from_json_text("{"), SignalError);
    CHECK_THROWS_AS(Signal::from_json_text(R"([{"interval":"[0,1]","props":["p"]}])"), SignalError);
}
