#pragma once

#include "mitl/eval.hpp"
#include "mitl/fourier_motzkin.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mitl {

/// One linear constraint a1*t1 + a2*t2 (rel) b over the two shift variables
/// of a candidate two-variable Release semantics.
struct LinearConstraint {
    enum class Rel { Lt, Le, Gt, Ge };

    Rational a1;
    Rational a2;
    Rational b;
    Rel rel = Rel::Le;

    std::string str() const;
};

const char* rel_name(LinearConstraint::Rel rel);
LinearConstraint::Rel rel_from_name(const std::string& name);

/// A conjunction of linear constraints over (t1, t2): a convex, possibly
/// empty, possibly unbounded region of the plane.
class Polyhedron {
public:
    Polyhedron() = default;
    explicit Polyhedron(std::vector<LinearConstraint> constraints)
        : constraints_(std::move(constraints)) {}

    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    /// Emptiness test of the region itself (strictness respected).
    bool feasible() const;

    /// Vertices of the topological closure; the closure of a non-empty region
    /// is the relaxation of its constraints.
    std::vector<std::pair<Rational, Rational>> closure_vertices() const;

    /// t2 values of vertical edges (edges lying on a line t2 = const) of the
    /// closure.
    std::vector<Rational> vertical_edge_t2() const;

    /// {t2 : (c, t2) in the region}.
    Interval slice_at_t1(const Rational& c) const;
    /// {t2 : (c, t2) in the closure}.
    Interval closure_slice_at_t1(const Rational& c) const;
    /// {t1 : (t1, r) in the closure}.
    Interval closure_slice_at_t2(const Rational& r) const;

    /// t1 coordinates where the clause truth along the witness line t1 = c
    /// can change because of the region's own geometry: boundary lines of the
    /// form t1 = const, and all pairwise boundary intersections.
    std::vector<Rational> critical_t1() const;

    /// Solutions c of "slice endpoint = beta": one per constraint that bounds
    /// t2 with a t1-dependent line.
    std::vector<Rational> crossings_at(const Rational& beta) const;

private:
    LinearSystem system(bool relaxed) const;

    std::vector<LinearConstraint> constraints_;
};

/// f^{t_var} |= psi, where psi is propositional over the signal's atoms.
struct SignalAtom {
    int var = 1;  // 1 or 2
    Formula psi;
};

/// One clause P => S: if (t1, t2) lies in the region, one of the (at most
/// two, one per variable) signal constraints must hold.
struct Clause {
    Polyhedron region;
    std::optional<SignalAtom> on_t1;
    std::optional<SignalAtom> on_t2;
};

/// Conjunction over blocks of disjunctions of clause sets, each clause set
/// read as "exists t1 such that for all t2 every clause holds".
struct CanonicalFormula {
    struct Disjunct {
        std::vector<Clause> clauses;
    };
    struct Block {
        std::vector<Disjunct> disjuncts;
    };
    std::vector<Block> blocks;

    /// JSON layout: {"blocks":[{"disjuncts":[{"clauses":[{"constraints":
    /// [{"a1":..,"a2":..,"rel":..,"b":..}],"signal_atoms":[{"var":1,
    /// "psi":"!p"}]}]}]}]} with rationals as strings.
    static CanonicalFormula from_json_text(const std::string& text);
    std::string to_json_text(bool pretty = false) const;
};

/// Witness for one satisfied block: the disjunct index and the line t1 = c.
struct BlockWitness {
    std::size_t disjunct = 0;
    Rational line;
};

struct CanonicalEval {
    bool value = false;
    /// One witness per block when the block is satisfied.
    std::vector<std::optional<BlockWitness>> witnesses;
};

/// Decides the formula over the signal; each block's "exists t1 for all t2"
/// is decided exactly by testing the witness line at every geometry- or
/// signal-induced breakpoint of c and at one interior point per cell.
CanonicalEval eval_canonical(const CanonicalFormula& phi, const Signal& f);

/// The two-disjunct Release of the two-quantifier semantics, for operands
/// (not p, not q) and the given decoration, expressed as a CanonicalFormula.
CanonicalFormula encode_old_release(const Interval& i);

struct CornerSets {
    std::vector<std::pair<Rational, Rational>> vertices;  // point part of C1
    std::vector<Rational> vertical_edges_t2;              // edge part of C1, one value per edge
    std::vector<Rational> c2;                             // projection of C1 on t2
    std::vector<Rational> c3;                             // c2 plus sup(i) when finite
};
CornerSets corner_sets(const CanonicalFormula& phi, const Interval& i);

struct ChosenAnchor {
    Rational r;
    Rational guard;  // r keeps this distance from every point of C3
};
/// Picks r in i away from C3: the midpoint of the widest component of
/// i minus C3 (for an unbounded widest component, one unit past its start).
ChosenAnchor choose_r(const CanonicalFormula& phi, const Interval& i);

/// delta > 0 such that no closure slice through (c, r) has width in
/// (0, delta], additionally kept below sup(i) - r.
Rational choose_delta(const CanonicalFormula& phi, const Rational& r, const Interval& i);

/// Samples `samples` admissible lines per polyhedron and re-verifies the
/// choose_delta postcondition on each; returns the number of violations.
std::size_t verify_delta(const CanonicalFormula& phi, const Rational& r, const Rational& delta,
                         std::size_t samples);

/// ([0,r],{p}), ((r,r+delta],{q}), ((r+delta,inf),{p}).
Signal build_f1(const Rational& r, const Rational& delta);

struct ChosenEpsilon {
    Rational epsilon;
    /// Every witnessed clause had an empty slice, so nothing constrained
    /// epsilon beyond the caps.
    bool degenerate = false;
};
/// Half the least of: per-clause containment/disjointness margins around r,
/// distances of witness lines above r, delta, and sup(i) - r.
ChosenEpsilon choose_epsilon(const CanonicalFormula& phi, const Signal& f1, const Rational& r,
                             const std::vector<std::optional<BlockWitness>>& witnesses,
                             const Interval& i, const Rational& delta);

/// ([0,r+eps),{p}), ([r+eps,r+delta],{q}), ((r+delta,inf),{p}); 0 < eps < delta.
Signal build_f2(const Rational& r, const Rational& delta, const Rational& epsilon);

/// Raised when the pipeline cannot exhibit a disagreement; this contradicts
/// the two-variable impossibility argument, so it indicates an input outside
/// the canonical class or an implementation fault.
struct NoMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RefutationReport {
    Rational r;
    Rational delta;
    std::optional<Rational> epsilon;
    Signal f1;
    std::optional<Signal> f2;
    bool phi_on_f1 = false;
    std::optional<bool> phi_on_f2;
    bool target_on_f1 = false;  // value of not(p U_i q) on f1 (true by construction)
    std::optional<bool> target_on_f2;
    int mismatch_signal = 0;  // 1 or 2
    bool degenerate_witness = false;
};

/// Runs the full construction against the candidate semantics and reports on
/// which of the two built signals it disagrees with not(p U_i q).
RefutationReport refute(const CanonicalFormula& phi, const Interval& i);

}  // namespace mitl
