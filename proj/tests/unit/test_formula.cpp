#include "mitl/formula.hpp"
#include "mitl/random_gen.hpp"

#include <doctest.h>

using namespace mitl;

namespace {

Interval itv(const char* s) { return Interval::parse(s); }

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");

bool nnf_shape(const Formula& f) {
    switch (f.op()) {
        case Formula::Op::Top:
        case Formula::Op::Bottom:
        case Formula::Op::Atom: return true;
        case Formula::Op::Not: return f.lhs().op() == Formula::Op::Atom;
        default: return nnf_shape(f.lhs()) && nnf_shape(f.rhs());
    }
}

}  // namespace

TEST_CASE("parsing the core syntax") {
    CHECK(Formula::parse("p U[1,2] q") == Formula::until(p, q, itv("[1,2]")));
    CHECK(Formula::parse("N q") == Formula::release(q, q, itv("(0,inf)")));
    CHECK(Formula::parse("p U q") == Formula::until(p, q, itv("(0,inf)")));
    CHECK(Formula::parse("F[0,5) x") == Formula::until(Formula::top(), Formula::atom("x"), itv("[0,5)")));
    CHECK(Formula::parse("G x") == Formula::release(Formula::bottom(), Formula::atom("x"), itv("(0,inf)")));
    CHECK(Formula::parse("!p & q | p") ==
          Formula::disjunction(Formula::conjunction(Formula::negation(p), q), p));
    CHECK(Formula::parse("p U (0,2) q") == Formula::until(p, q, itv("(0,2)")));
    CHECK(Formula::parse("p U (q | r)") ==
          Formula::until(p, Formula::disjunction(q, Formula::atom("r")), itv("(0,inf)")));
    // N binds tighter than U; F absorbs a following U.
    CHECK(Formula::parse("N p U q") == Formula::until(Formula::op_n(p), q, itv("(0,inf)")));
    CHECK(Formula::parse("F p U q") ==
          Formula::until(Formula::top(), Formula::until(p, q, itv("(0,inf)")), itv("(0,inf)")));
}

TEST_CASE("the request/response formula parses to an always-rooted tree") {
    const Formula f = Formula::parse(
        "G (!req | F[0,5) resp | (G[0,5) !resp & F(5,5.1] error))");
    CHECK(f.op() == Formula::Op::Release);
    CHECK(f.lhs() == Formula::bottom());
    CHECK(f.interval() == itv("(0,inf)"));
    const Formula body = f.rhs();
    CHECK(body.op() == Formula::Op::Or);
    CHECK(body.rhs().op() == Formula::Op::And);
    CHECK(body.rhs().rhs().interval() == itv("(5,51/10]"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(Formula::parse("p U[1,2"), ParseError);
    CHECK_THROWS_AS(Formula::parse("p &"), ParseError);
    CHECK_THROWS_AS(Formula::parse("(p"), ParseError);
    CHECK_THROWS_AS(Formula::parse("p q"), ParseError);
    CHECK_THROWS_AS(Formula::parse("p U[2,-1] q"), ParseError);
    try {
        Formula::parse("p | | q");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("negative decorations are rejected") {
    CHECK_THROWS_AS(Formula::until(p, q, Interval(TimeBound(Rational(-1)), TimeBound(Rational(1)), true, true)),
                    std::invalid_argument);
}

TEST_CASE("printing golden cases") {
    CHECK(Formula::until(p, q, itv("[1,2]")).str() == "p U[1,2] q");
    CHECK(Formula::negation(p).str() == "!p");
    CHECK(Formula::op_n(q).str() == "N q");
    CHECK(Formula::parse("p U q").str() == "p U q");
    CHECK(Formula::always(Formula::bottom(), itv("(0,inf)")).str() == "G false");
}

TEST_CASE("print then parse is the identity on random formulas") {
    Rng rng(21);
    for (int k = 0; k < 500; ++k) {
        const Formula f = random_formula(rng, 4, {"p", "q", "r"});
        CHECK(Formula::parse(f.str()) == f);
    }
}

TEST_CASE("negated normal form golden cases") {
    const Formula u = Formula::until(p, q, itv("(0,2)"));
    CHECK(Formula::negation(u).nnf() ==
          Formula::release(Formula::negation(p), Formula::negation(q), itv("(0,2)")));
    CHECK(Formula::negation(Formula::negation(p)).nnf() == p);
    CHECK(Formula::negation(Formula::conjunction(p, q)).nnf() ==
          Formula::disjunction(Formula::negation(p), Formula::negation(q)));
}

TEST_CASE("nnf properties") {
    Rng rng(22);
    for (int k = 0; k < 400; ++k) {
        const Formula f = random_formula(rng, 4, {"p", "q"});
        const Formula n = f.nnf();
        CHECK(n.nnf() == n);
        CHECK(nnf_shape(n));
        CHECK(n.is_in_nnf());
    }
}

TEST_CASE("to_old golden cases") {
    const Formula r_pos = Formula::release(p, q, itv("[1,2]"));
    CHECK(r_pos.to_old() ==
          Formula::disjunction(Formula::release(p, q, itv("[1,2]")),
                               Formula::release(Formula::op_n(p), q, itv("[1,2]"))));

    const Formula r_open = Formula::release(p, q, itv("(0,1)"));
    CHECK(r_open.to_old() ==
          Formula::disjunction(
              Formula::disjunction(Formula::release(p, q, itv("(0,1)")),
                                   Formula::release(Formula::op_n(p), q, itv("(0,1)"))),
              Formula::op_n(p)));

    const Formula r_closed = Formula::release(p, q, itv("[0,1]"));
    CHECK(r_closed.to_old() ==
          Formula::disjunction(
              Formula::disjunction(Formula::release(p, q, itv("[0,1]")),
                                   Formula::release(Formula::op_n(p), q, itv("[0,1]"))),
              Formula::conjunction(q, Formula::op_n(p))));
}

TEST_CASE("subformula dag sizes") {
    CHECK(Formula::until(p, q, itv("[1,2]")).subformula_dag_size() == 3);
    CHECK(Formula::release(p, q, itv("[1,2]")).to_old().subformula_dag_size() == 6);
}

TEST_CASE("to_old keeps nnf and respects the sixfold bound") {
    Rng rng(23);
    for (int k = 0; k < 400; ++k) {
        const Formula f = random_formula(rng, 4, {"p", "q", "r"});
        const Formula nf = f.nnf();
        CHECK(nf.to_old().is_in_nnf());
        CHECK(f.to_old().subformula_dag_size() <= 6 * f.subformula_dag_size());
    }
}

TEST_CASE("fragment classification golden cases") {
    CHECK_FALSE(Formula::parse("p U[1,1] q").classify().is_mitl);
    {
        const FragmentReport rep = Formula::parse("p U(0,5] q").classify();
        CHECK(rep.is_mitl);
        CHECK(rep.is_mitl0inf);
        CHECK(rep.is_mitlwi);
    }
    {
        const FragmentReport rep = Formula::parse("G[1,2] F[1/100,1/50] q").classify();
        CHECK(rep.is_mitl);
        CHECK_FALSE(rep.is_mitl0inf);
        CHECK(rep.is_mitlwi);
        REQUIRE(rep.worst_ratio.has_value());
        CHECK(*rep.worst_ratio == Rational(2));
        CHECK(rep.size_bits >= 2);
    }
}

TEST_CASE("fragments nest") {
    Rng rng(24);
    for (int k = 0; k < 500; ++k) {
        const FragmentReport rep = random_formula(rng, 4, {"p", "q"}).classify();
        if (rep.is_mitl0inf) CHECK(rep.is_mitlwi);
        if (rep.is_mitlwi) CHECK(rep.is_mitl);
    }
}

TEST_CASE("normal form recognition") {
    {
        const NormalFormReport rep = Formula::parse("F(0,3] p").normal_form();
        REQUIRE(rep.temporal_types.size() == 1);
        CHECK(rep.temporal_types[0].second == 1);
        CHECK(rep.in_normal_form);
    }
    {
        const NormalFormReport rep = Formula::parse("p U[1,2] q").normal_form();
        REQUIRE(rep.temporal_types.size() == 1);
        CHECK(rep.temporal_types[0].second == 4);
        CHECK(rep.in_normal_form);
    }
    {
        const NormalFormReport rep = Formula::parse("p U[0,2] q").normal_form();
        REQUIRE(rep.temporal_types.size() == 1);
        CHECK(rep.temporal_types[0].second == 0);
        CHECK_FALSE(rep.in_normal_form);
    }
    CHECK(Formula::parse("G(0,2) !p").normal_form().temporal_types[0].second == 2);
    CHECK(Formula::parse("G p").normal_form().temporal_types[0].second == 3);
    CHECK(Formula::parse("p R[1,2] q").normal_form().temporal_types[0].second == 5);
    CHECK(Formula::parse("p U q").normal_form().temporal_types[0].second == 6);
    CHECK(Formula::parse("N p").normal_form().temporal_types[0].second == 0);
    // Negation above a compound subformula breaks the shape.
    CHECK_FALSE(Formula::parse("!(p & q)").normal_form().in_normal_form);
    CHECK(Formula::parse("(!p | q) & (p U[1,2] !q)").normal_form().in_normal_form);
}
