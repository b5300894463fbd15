#include "mitl/refuter.hpp"

#include "mitl/random_gen.hpp"

#include <json.hpp>

#include <algorithm>

namespace mitl {

namespace {

const Rational kZero{0};
const Rational kOne{1};

}  // namespace

// ---------------------------------------------------------------------------
// Constraints and polyhedra
// ---------------------------------------------------------------------------

const char* rel_name(LinearConstraint::Rel rel) {
    switch (rel) {
        case LinearConstraint::Rel::Lt: return "<";
        case LinearConstraint::Rel::Le: return "<=";
        case LinearConstraint::Rel::Gt: return ">";
        case LinearConstraint::Rel::Ge: return ">=";
    }
    return "?";
}

LinearConstraint::Rel rel_from_name(const std::string& name) {
    if (name == "<") return LinearConstraint::Rel::Lt;
    if (name == "<=") return LinearConstraint::Rel::Le;
    if (name == ">") return LinearConstraint::Rel::Gt;
    if (name == ">=") return LinearConstraint::Rel::Ge;
    throw std::invalid_argument("unknown relation symbol '" + name + "'");
}

std::string LinearConstraint::str() const {
    return a1.str() + "*t1 + " + a2.str() + "*t2 " + rel_name(rel) + " " + b.str();
}

LinearSystem Polyhedron::system(bool relaxed) const {
    LinearSystem sys(2);
    for (const LinearConstraint& c : constraints_) {
        const bool upper = c.rel == LinearConstraint::Rel::Lt || c.rel == LinearConstraint::Rel::Le;
        const bool strict =
            !relaxed && (c.rel == LinearConstraint::Rel::Lt || c.rel == LinearConstraint::Rel::Gt);
        if (upper) {
            sys.add_le({c.a1, c.a2}, c.b, strict);
        } else {
            sys.add_le({-c.a1, -c.a2}, -c.b, strict);
        }
    }
    return sys;
}

bool Polyhedron::feasible() const { return system(false).feasible(); }

std::vector<std::pair<Rational, Rational>> Polyhedron::closure_vertices() const {
    std::vector<std::pair<Rational, Rational>> out;
    if (!feasible()) return out;
    const auto& cs = constraints_;
    auto on_closure = [&](const Rational& x, const Rational& y) {
        for (const LinearConstraint& c : cs) {
            const Rational v = c.a1 * x + c.a2 * y;
            const bool upper = c.rel == LinearConstraint::Rel::Lt || c.rel == LinearConstraint::Rel::Le;
            if (upper ? v > c.b : v < c.b) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t k = i + 1; k < cs.size(); ++k) {
            const Rational det = cs[i].a1 * cs[k].a2 - cs[k].a1 * cs[i].a2;
            if (det.is_zero()) continue;
            const Rational x = (cs[i].b * cs[k].a2 - cs[k].b * cs[i].a2) / det;
            const Rational y = (cs[i].a1 * cs[k].b - cs[k].a1 * cs[i].b) / det;
            if (on_closure(x, y)) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> Polyhedron::vertical_edge_t2() const {
    std::vector<Rational> out;
    if (!feasible()) return out;
    for (const LinearConstraint& c : constraints_) {
        if (!c.a1.is_zero() || c.a2.is_zero()) continue;
        const Rational t2 = c.b / c.a2;
        const Interval touched = closure_slice_at_t2(t2);
        if (touched.width() > TimeBound(kZero)) out.push_back(t2);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Interval Polyhedron::slice_at_t1(const Rational& c) const {
    LinearSystem sys(1);
    for (const LinearConstraint& cst : constraints_) {
        const bool upper = cst.rel == LinearConstraint::Rel::Lt || cst.rel == LinearConstraint::Rel::Le;
        const bool strict = cst.rel == LinearConstraint::Rel::Lt || cst.rel == LinearConstraint::Rel::Gt;
        const Rational rhs = cst.b - cst.a1 * c;
        if (upper) {
            sys.add_le({cst.a2}, rhs, strict);
        } else {
            sys.add_le({-cst.a2}, -rhs, strict);
        }
    }
    return sys.solve_single(0);
}

Interval Polyhedron::closure_slice_at_t1(const Rational& c) const {
    if (!feasible()) return Interval::empty();
    LinearSystem sys(1);
    for (const LinearConstraint& cst : constraints_) {
        const bool upper = cst.rel == LinearConstraint::Rel::Lt || cst.rel == LinearConstraint::Rel::Le;
        const Rational rhs = cst.b - cst.a1 * c;
        if (upper) {
            sys.add_le({cst.a2}, rhs, false);
        } else {
            sys.add_le({-cst.a2}, -rhs, false);
        }
    }
    return sys.solve_single(0);
}

Interval Polyhedron::closure_slice_at_t2(const Rational& r) const {
    if (!feasible()) return Interval::empty();
    LinearSystem sys(1);
    for (const LinearConstraint& cst : constraints_) {
        const bool upper = cst.rel == LinearConstraint::Rel::Lt || cst.rel == LinearConstraint::Rel::Le;
        const Rational rhs = cst.b - cst.a2 * r;
        if (upper) {
            sys.add_le({cst.a1}, rhs, false);
        } else {
            sys.add_le({-cst.a1}, -rhs, false);
        }
    }
    return sys.solve_single(0);
}

std::vector<Rational> Polyhedron::critical_t1() const {
    std::vector<Rational> out;
    const auto& cs = constraints_;
    for (const LinearConstraint& c : cs) {
        if (!c.a1.is_zero() && c.a2.is_zero()) out.push_back(c.b / c.a1);
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t k = i + 1; k < cs.size(); ++k) {
            const Rational det = cs[i].a1 * cs[k].a2 - cs[k].a1 * cs[i].a2;
            if (det.is_zero()) continue;
            out.push_back((cs[i].b * cs[k].a2 - cs[k].b * cs[i].a2) / det);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> Polyhedron::crossings_at(const Rational& beta) const {
    std::vector<Rational> out;
    for (const LinearConstraint& c : constraints_) {
        // The slice endpoint contributed by this constraint is
        // t2 = (b - a1*c)/a2; it meets beta at c = (b - a2*beta)/a1.
        if (c.a1.is_zero() || c.a2.is_zero()) continue;
        out.push_back((c.b - c.a2 * beta) / c.a1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical formulas: JSON form
// ---------------------------------------------------------------------------

namespace {

Formula parse_propositional(const std::string& text) {
    Formula f = Formula::parse(text);
    if (!f.is_propositional()) {
        throw std::invalid_argument("signal constraint must be propositional: '" + text + "'");
    }
    return f;
}

Clause clause_from_json(const nlohmann::json& doc) {
    Clause clause;
    std::vector<LinearConstraint> cs;
    if (doc.contains("constraints")) {
        for (const auto& c : doc.at("constraints")) {
            LinearConstraint lc;
            lc.a1 = Rational::parse(c.at("a1").get<std::string>());
            lc.a2 = Rational::parse(c.at("a2").get<std::string>());
            lc.b = Rational::parse(c.at("b").get<std::string>());
            lc.rel = rel_from_name(c.at("rel").get<std::string>());
            cs.push_back(std::move(lc));
        }
    }
    clause.region = Polyhedron(std::move(cs));
    if (doc.contains("signal_atoms")) {
        for (const auto& a : doc.at("signal_atoms")) {
            SignalAtom atom;
            atom.var = a.at("var").get<int>();
            atom.psi = parse_propositional(a.at("psi").get<std::string>());
            if (atom.var == 1) {
                if (clause.on_t1) throw std::invalid_argument("clause has two t1 signal constraints");
                clause.on_t1 = std::move(atom);
            } else if (atom.var == 2) {
                if (clause.on_t2) throw std::invalid_argument("clause has two t2 signal constraints");
                clause.on_t2 = std::move(atom);
            } else {
                throw std::invalid_argument("signal constraint var must be 1 or 2");
            }
        }
    }
    return clause;
}

nlohmann::json clause_to_json(const Clause& clause) {
    nlohmann::json doc;
    doc["constraints"] = nlohmann::json::array();
    for (const LinearConstraint& c : clause.region.constraints()) {
        doc["constraints"].push_back({{"a1", c.a1.str()},
                                      {"a2", c.a2.str()},
                                      {"rel", rel_name(c.rel)},
                                      {"b", c.b.str()}});
    }
    doc["signal_atoms"] = nlohmann::json::array();
    for (const auto* atom : {&clause.on_t1, &clause.on_t2}) {
        if (atom->has_value()) {
            doc["signal_atoms"].push_back({{"var", (*atom)->var}, {"psi", (*atom)->psi.str()}});
        }
    }
    return doc;
}

}  // namespace

CanonicalFormula CanonicalFormula::from_json_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    CanonicalFormula out;
    for (const auto& b : doc.at("blocks")) {
        Block block;
        for (const auto& d : b.at("disjuncts")) {
            Disjunct disjunct;
            for (const auto& c : d.at("clauses")) disjunct.clauses.push_back(clause_from_json(c));
            block.disjuncts.push_back(std::move(disjunct));
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

std::string CanonicalFormula::to_json_text(bool pretty) const {
    nlohmann::json doc;
    doc["blocks"] = nlohmann::json::array();
    for (const Block& b : blocks) {
        nlohmann::json jb;
        jb["disjuncts"] = nlohmann::json::array();
        for (const Disjunct& d : b.disjuncts) {
            nlohmann::json jd;
            jd["clauses"] = nlohmann::json::array();
            for (const Clause& c : d.clauses) jd["clauses"].push_back(clause_to_json(c));
            jb["disjuncts"].push_back(std::move(jd));
        }
        doc["blocks"].push_back(std::move(jb));
    }
    return pretty ? doc.dump(2) : doc.dump();
}

// ---------------------------------------------------------------------------
// Deciding canonical formulas over a signal
// ---------------------------------------------------------------------------

namespace {

// Truth set of a propositional formula over the signal's time line.
IntervalSet psi_truth_set(Evaluator& ev, const Formula& psi) { return ev.truth_set(psi); }

bool psi_at(const Signal& f, const Formula& psi, const Rational& t) {
    if (t.is_negative()) return false;  // the signal is undefined before 0
    return oracle_sat(f, psi, t, Semantics::New);
}

// Truth of one clause along the witness line t1 = c.
bool clause_on_line(const Clause& clause, const Signal& f, Evaluator& ev, const Rational& c) {
    const Interval slice = clause.region.slice_at_t1(c);
    if (slice.is_empty()) return true;
    if (clause.on_t1 && psi_at(f, clause.on_t1->psi, c)) return true;
    if (clause.on_t2) {
        return psi_truth_set(ev, clause.on_t2->psi).contains_interval(slice);
    }
    return false;
}

std::optional<BlockWitness> block_witness(const CanonicalFormula::Block& block, const Signal& f,
                                          Evaluator& ev) {
    for (std::size_t j = 0; j < block.disjuncts.size(); ++j) {
        const auto& clauses = block.disjuncts[j].clauses;

        std::vector<Rational> grid;
        for (const Rational& b : f.breakpoints()) grid.push_back(b);
        for (const Clause& clause : clauses) {
            for (const Rational& g : clause.region.critical_t1()) grid.push_back(g);
            if (clause.on_t2) {
                std::vector<Rational> betas = psi_truth_set(ev, clause.on_t2->psi).breakpoints();
                betas.push_back(kZero);
                for (const Rational& beta : betas) {
                    for (const Rational& g : clause.region.crossings_at(beta)) grid.push_back(g);
                }
            }
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

        std::vector<Rational> candidates;
        if (grid.empty()) {
            candidates.push_back(kZero);
        } else {
            candidates.push_back(grid.front() - kOne);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                candidates.push_back(grid[k]);
                if (k + 1 < grid.size()) candidates.push_back(midpoint(grid[k], grid[k + 1]));
            }
            candidates.push_back(grid.back() + kOne);
        }

        for (const Rational& c : candidates) {
            bool all = true;
            for (const Clause& clause : clauses) {
                if (!clause_on_line(clause, f, ev, c)) {
                    all = false;
                    break;
                }
            }
            if (all) return BlockWitness{j, c};
        }
    }
    return std::nullopt;
}

}  // namespace

CanonicalEval eval_canonical(const CanonicalFormula& phi, const Signal& f) {
    CanonicalEval out;
    out.value = true;
    Evaluator ev(f, Semantics::New);
    for (const CanonicalFormula::Block& block : phi.blocks) {
        auto w = block_witness(block, f, ev);
        if (!w) out.value = false;
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

CanonicalFormula encode_old_release(const Interval& i) {
    if (i.is_empty()) throw std::invalid_argument("encode_old_release: empty interval");
    auto t2_in_i = [&]() {
        std::vector<LinearConstraint> cs;
        cs.push_back({kZero, kOne, i.lo().finite(),
                      i.lo_closed() ? LinearConstraint::Rel::Ge : LinearConstraint::Rel::Gt});
        if (i.hi().is_finite()) {
            cs.push_back({kZero, kOne, i.hi().finite(),
                          i.hi_closed() ? LinearConstraint::Rel::Le : LinearConstraint::Rel::Lt});
        }
        return cs;
    };
    const Formula not_p = Formula::negation(Formula::atom("p"));
    const Formula not_q = Formula::negation(Formula::atom("q"));

    CanonicalFormula::Disjunct universal;
    {
        Clause c;
        c.region = Polyhedron(t2_in_i());
        c.on_t2 = SignalAtom{2, not_q};
        universal.clauses.push_back(std::move(c));
    }

    CanonicalFormula::Disjunct existential;
    {
        // t1 <= 0 implies nothing: forces the witness line above 0.
        Clause positive;
        positive.region = Polyhedron({{kOne, kZero, kZero, LinearConstraint::Rel::Le}});
        existential.clauses.push_back(std::move(positive));

        Clause at_t1;
        at_t1.region = Polyhedron(std::vector<LinearConstraint>{});  // whole plane
        at_t1.on_t1 = SignalAtom{1, not_p};
        existential.clauses.push_back(std::move(at_t1));

        std::vector<LinearConstraint> cs = t2_in_i();
        cs.push_back({kZero, kOne, kZero, LinearConstraint::Rel::Ge});   // t2 >= 0
        cs.push_back({-kOne, kOne, kZero, LinearConstraint::Rel::Le});   // t2 <= t1
        Clause covered;
        covered.region = Polyhedron(std::move(cs));
        covered.on_t2 = SignalAtom{2, not_q};
        existential.clauses.push_back(std::move(covered));
    }

    CanonicalFormula out;
    CanonicalFormula::Block block;
    block.disjuncts.push_back(std::move(universal));
    block.disjuncts.push_back(std::move(existential));
    out.blocks.push_back(std::move(block));
    return out;
}

// ---------------------------------------------------------------------------
// Corner sets and the r / delta / epsilon parameters
// ---------------------------------------------------------------------------

namespace {

std::vector<const Polyhedron*> all_regions(const CanonicalFormula& phi) {
    std::vector<const Polyhedron*> out;
    for (const auto& block : phi.blocks) {
        for (const auto& disjunct : block.disjuncts) {
            for (const auto& clause : disjunct.clauses) out.push_back(&clause.region);
        }
    }
    return out;
}

}  // namespace

CornerSets corner_sets(const CanonicalFormula& phi, const Interval& i) {
    CornerSets out;
    for (const Polyhedron* p : all_regions(phi)) {
        for (const auto& v : p->closure_vertices()) out.vertices.push_back(v);
        for (const Rational& t2 : p->vertical_edge_t2()) out.vertical_edges_t2.push_back(t2);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    for (const auto& v : out.vertices) out.c2.push_back(v.second);
    out.c2.insert(out.c2.end(), out.vertical_edges_t2.begin(), out.vertical_edges_t2.end());
    std::sort(out.c2.begin(), out.c2.end());
    out.c2.erase(std::unique(out.c2.begin(), out.c2.end()), out.c2.end());
    out.c3 = out.c2;
    if (i.sup().is_finite()) out.c3.push_back(i.sup().finite());
    std::sort(out.c3.begin(), out.c3.end());
    out.c3.erase(std::unique(out.c3.begin(), out.c3.end()), out.c3.end());
    return out;
}

ChosenAnchor choose_r(const CanonicalFormula& phi, const Interval& i) {
    if (i.is_empty() || i.is_singleton()) {
        throw std::invalid_argument("choose_r: the interval must be neither empty nor a singleton");
    }
    const CornerSets corners = corner_sets(phi, i);
    std::vector<Interval> cuts;
    for (const Rational& c : corners.c3) cuts.push_back(Interval::singleton(c));
    const IntervalSet components = IntervalSet(i).set_minus(IntervalSet::of(std::move(cuts)));

    const Interval* widest = nullptr;
    for (const Interval& comp : components.members()) {
        if (!widest || comp.width() > widest->width()) widest = &comp;
    }
    if (!widest) throw std::logic_error("choose_r: no admissible component");  // C3 is finite

    ChosenAnchor out;
    if (widest->hi().is_pos_inf()) {
        out.r = widest->lo().finite() + kOne;
        out.guard = Rational(1, 2);
    } else {
        out.r = midpoint(widest->lo().finite(), widest->hi().finite());
        out.guard = (widest->hi().finite() - widest->lo().finite()) * Rational(1, 4);
    }
    if (!i.contains(out.r) || eps_ball(corners.c3, out.guard).contains(out.r)) {
        throw std::logic_error("choose_r: postcondition violated");
    }
    return out;
}

Rational choose_delta(const CanonicalFormula& phi, const Rational& r, const Interval& i) {
    std::optional<Rational> min_width;
    for (const Polyhedron* p : all_regions(phi)) {
        const Interval admissible = p->closure_slice_at_t2(r);
        if (admissible.is_empty()) continue;

        std::vector<Rational> cs;
        if (admissible.lo().is_finite()) cs.push_back(admissible.lo().finite());
        if (admissible.hi().is_finite()) cs.push_back(admissible.hi().finite());
        for (const auto& v : p->closure_vertices()) {
            if (admissible.contains(v.first)) cs.push_back(v.first);
        }
        if (cs.empty()) cs.push_back(kZero);  // the admissible set is the whole line

        for (const Rational& c : cs) {
            const Interval slice = p->closure_slice_at_t1(c);
            const TimeBound w = slice.width();
            if (w.is_finite() && w > TimeBound(kZero)) {
                if (!min_width || w.finite() < *min_width) min_width = w.finite();
            }
        }
    }
    std::optional<Rational> delta;
    if (min_width) delta = *min_width * Rational(1, 2);
    if (i.sup().is_finite()) {
        const Rational cap = (i.sup().finite() - r) * Rational(1, 2);
        if (!delta || cap < *delta) delta = cap;
    }
    if (!delta) delta = kOne;  // nothing constrains it
    return *delta;
}

std::size_t verify_delta(const CanonicalFormula& phi, const Rational& r, const Rational& delta,
                         std::size_t samples) {
    std::size_t violations = 0;
    Rng rng(0x5eedULL);
    for (const Polyhedron* p : all_regions(phi)) {
        const Interval admissible = p->closure_slice_at_t2(r);
        if (admissible.is_empty()) continue;
        // Sample rational lines across the admissible span (or around its
        // finite end when unbounded).
        Rational base = admissible.lo().is_finite() ? admissible.lo().finite()
                        : admissible.hi().is_finite() ? admissible.hi().finite() - Rational(100)
                                                      : -Rational(50);
        Rational span = admissible.width().is_finite() ? admissible.width().finite() : Rational(100);
        if (span.is_zero()) span = kOne;
        for (std::size_t k = 0; k < samples; ++k) {
            const Rational frac(static_cast<long>(rng.below(10000)), 10000);
            Rational c = base + span * frac;
            if (!admissible.contains(c)) {
                c = admissible.lo().is_finite() && admissible.contains(admissible.lo().finite())
                        ? admissible.lo().finite()
                        : c;
                if (!admissible.contains(c)) continue;
            }
            const TimeBound w = p->closure_slice_at_t1(c).width();
            if (w.is_finite() && w > TimeBound(kZero) && w <= TimeBound(delta)) ++violations;
        }
    }
    return violations;
}

Signal build_f1(const Rational& r, const Rational& delta) {
    if (!r.is_positive() || !delta.is_positive()) {
        throw std::invalid_argument("build_f1: r and delta must be positive");
    }
    return Signal::validate({
        {Interval::closed(kZero, r), {"p"}},
        {Interval::left_open(r, r + delta), {"q"}},
        {Interval::greater_than(r + delta), {"p"}},
    });
}

Signal build_f2(const Rational& r, const Rational& delta, const Rational& epsilon) {
    if (!epsilon.is_positive() || !(epsilon < delta)) {
        throw std::invalid_argument("build_f2: need 0 < epsilon < delta");
    }
    return Signal::validate({
        {Interval::right_open(kZero, r + epsilon), {"p"}},
        {Interval::closed(r + epsilon, r + delta), {"q"}},
        {Interval::greater_than(r + delta), {"p"}},
    });
}

ChosenEpsilon choose_epsilon(const CanonicalFormula& phi, const Signal& f1, const Rational& r,
                             const std::vector<std::optional<BlockWitness>>& witnesses,
                             const Interval& i, const Rational& delta) {
    (void)f1;
    std::vector<Rational> margins{delta};
    if (i.sup().is_finite()) margins.push_back(i.sup().finite() - r);

    bool any_slice = false;
    const TimeBound rb{r};
    for (std::size_t b = 0; b < phi.blocks.size() && b < witnesses.size(); ++b) {
        if (!witnesses[b]) continue;
        const Rational& c = witnesses[b]->line;
        if (c > r) margins.push_back(c - r);
        const auto& clauses = phi.blocks[b].disjuncts[witnesses[b]->disjunct].clauses;
        for (const Clause& clause : clauses) {
            const Interval slice = clause.region.slice_at_t1(c);
            if (slice.is_empty()) continue;
            any_slice = true;
            if (slice.sup() <= rb) continue;            // (r, r+eps) misses it outright
            if (slice.inf() > rb) {
                margins.push_back(slice.inf().finite() - r);  // keep (r, r+eps) below it
            } else if (slice.sup().is_finite()) {
                margins.push_back(slice.sup().finite() - r);  // keep (r, r+eps) inside it
            }
        }
    }

    ChosenEpsilon out;
    out.degenerate = !any_slice;
    Rational least = margins.front();
    for (const Rational& m : margins) least = mitl::min(least, m);
    out.epsilon = least * Rational(1, 2);
    return out;
}

RefutationReport refute(const CanonicalFormula& phi, const Interval& i) {
    if (!i.is_empty() && i.lo() < TimeBound(kZero)) {
        throw std::invalid_argument("refute: the interval must lie inside [0, inf)");
    }
    const ChosenAnchor anchor = choose_r(phi, i);
    const Rational delta = choose_delta(phi, anchor.r, i);

    RefutationReport report;
    report.r = anchor.r;
    report.delta = delta;
    report.f1 = build_f1(anchor.r, delta);

    const Formula target = Formula::negation(
        Formula::until(Formula::atom("p"), Formula::atom("q"), i));
    report.target_on_f1 = sat(report.f1, target, Semantics::Old);

    const CanonicalEval on_f1 = eval_canonical(phi, report.f1);
    report.phi_on_f1 = on_f1.value;
    if (!on_f1.value) {
        if (!report.target_on_f1) {
            throw NoMismatchError("the target formula is unexpectedly false on the first signal");
        }
        report.mismatch_signal = 1;
        return report;
    }

    const ChosenEpsilon eps = choose_epsilon(phi, report.f1, anchor.r, on_f1.witnesses, i, delta);
    report.epsilon = eps.epsilon;
    report.degenerate_witness = eps.degenerate;
    report.f2 = build_f2(anchor.r, delta, eps.epsilon);
    report.target_on_f2 = sat(*report.f2, target, Semantics::Old);
    const CanonicalEval on_f2 = eval_canonical(phi, *report.f2);
    report.phi_on_f2 = on_f2.value;

    if (*report.phi_on_f2 && !*report.target_on_f2) {
        report.mismatch_signal = 2;
        return report;
    }
    throw NoMismatchError("no disagreement materialized; the input is outside the canonical class "
                          "or the construction is faulty");
}

}  // namespace mitl
