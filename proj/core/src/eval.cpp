#include "mitl/eval.hpp"

#include "mitl/fourier_motzkin.hpp"

#include <algorithm>

namespace mitl {

const char* semantics_name(Semantics sem) { return sem == Semantics::Old ? "old" : "new"; }

namespace {

const Rational kZero{0};
const Rational kOne{1};

std::vector<Rational> coeffs2(long t, long t1) { return {Rational(t), Rational(t1)}; }
std::vector<Rational> coeffs3(long t, long t1, long t2) { return {Rational(t), Rational(t1), Rational(t2)}; }

void constrain_member(LinearSystem& sys, std::vector<Rational> coef, const Interval& member) {
    // sum coef * x lies in `member`.
    sys.add_ge(coef, member.lo(), !member.lo_closed());
    sys.add_le(std::move(coef), member.hi(), !member.hi_closed());
}

}  // namespace

const IntervalSet& Evaluator::truth_set(const Formula& phi) {
    auto it = cache_.find(phi.node());
    if (it != cache_.end()) return it->second;
    IntervalSet result = compute(phi);
    return cache_.emplace(phi.node(), std::move(result)).first->second;
}

IntervalSet Evaluator::compute(const Formula& phi) {
    using Op = Formula::Op;
    switch (phi.op()) {
        case Op::Top: return IntervalSet::nonneg();
        case Op::Bottom: return IntervalSet::empty_set();
        case Op::Atom: return signal_->atom_truth_set(phi.atom_name());
        case Op::Not: return truth_set(phi.lhs()).complement_within_nonneg();
        case Op::Or: {
            const IntervalSet& a = truth_set(phi.lhs());
            return a.union_with(truth_set(phi.rhs()));
        }
        case Op::And: {
            const IntervalSet& a = truth_set(phi.lhs());
            return a.intersect(truth_set(phi.rhs()));
        }
        case Op::Until: {
            const IntervalSet& s1 = truth_set(phi.lhs());
            const IntervalSet& s2 = truth_set(phi.rhs());
            return eval_until(s1, s2, phi.interval());
        }
        case Op::Release: {
            const IntervalSet& s1 = truth_set(phi.lhs());
            const IntervalSet& s2 = truth_set(phi.rhs());
            return eval_release(s1, s2, phi.interval());
        }
    }
    return IntervalSet::empty_set();
}

// t is in the result iff there is t1 in itv with t+t1 in s2 and (t, t+t1)
// inside s1. The open gap (t, t+t1) fits inside one member of s1, so the
// existential splits over (member of s1, member of s2) pairs, each pair
// giving a convex system over (t, t1).
IntervalSet Evaluator::eval_until(const IntervalSet& s1, const IntervalSet& s2, const Interval& itv) const {
    if (itv.is_empty()) return IntervalSet::empty_set();
    std::vector<Interval> out;
    if (itv.contains(kZero)) {
        // t1 = 0: the gap is empty and only t in s2 remains.
        for (const Interval& k : s2.members()) out.push_back(k);
    }
    for (const Interval& j : s1.members()) {
        for (const Interval& k : s2.members()) {
            LinearSystem sys(2);
            sys.add_ge(coeffs2(0, 1), TimeBound(kZero), true);       // t1 > 0
            sys.add_ge(coeffs2(0, 1), itv.lo(), !itv.lo_closed());   // t1 in itv
            sys.add_le(coeffs2(0, 1), itv.hi(), !itv.hi_closed());
            sys.add_ge(coeffs2(1, 0), j.lo(), false);                // (t, t+t1) inside j
            sys.add_le(coeffs2(1, 1), j.hi(), false);
            constrain_member(sys, coeffs2(1, 1), k);                 // t + t1 in k
            Interval r = sys.eliminate(1).solve_single(0);
            if (!r.is_empty()) out.push_back(r);
        }
    }
    return IntervalSet::of(std::move(out)).intersect(Interval::nonneg());
}

IntervalSet Evaluator::eval_release(const IntervalSet& s1, const IntervalSet& s2, const Interval& itv) const {
    if (itv.is_empty()) return IntervalSet::nonneg();  // the universal disjunct is vacuous
    std::vector<Interval> out;

    // Disjunct 1: t + itv inside s2.
    for (const Interval& k : s2.members()) {
        Interval r = fit_shifts(k, itv);
        if (!r.is_empty()) out.push_back(r);
    }

    // Disjunct 2: some t1 > 0 with t+t1 in s1 and t + (itv up to t1) inside s2.
    for (const Interval& j : s1.members()) {
        {
            // itv up to t1 empty: t1 below the decoration.
            LinearSystem sys(2);
            sys.add_ge(coeffs2(0, 1), TimeBound(kZero), true);      // t1 > 0
            sys.add_le(coeffs2(0, 1), itv.lo(), itv.lo_closed());   // t1 < lo (or <= when lo not in itv)
            constrain_member(sys, coeffs2(1, 1), j);                // t + t1 in j
            Interval r = sys.eliminate(1).solve_single(0);
            if (!r.is_empty()) out.push_back(r);
        }
        for (const Interval& k : s2.members()) {
            {
                // t1 inside the decoration: covered range is itv up to t1,
                // whose supremum t1 is attained.
                LinearSystem sys(2);
                sys.add_ge(coeffs2(0, 1), TimeBound(kZero), true);
                sys.add_ge(coeffs2(0, 1), itv.lo(), !itv.lo_closed());
                sys.add_le(coeffs2(0, 1), itv.hi(), !itv.hi_closed());
                constrain_member(sys, coeffs2(1, 1), j);
                sys.add_ge(coeffs2(1, 0), k.lo() - itv.lo(), !k.lo_closed() && itv.lo_closed());
                sys.add_le(coeffs2(1, 1), k.hi(), !k.hi_closed());
                Interval r = sys.eliminate(1).solve_single(0);
                if (!r.is_empty()) out.push_back(r);
            }
            {
                // t1 at or above the decoration: the whole of t + itv must
                // lie inside k, and t+t1 only needs to hit j.
                LinearSystem sys(2);
                sys.add_ge(coeffs2(0, 1), TimeBound(kZero), true);
                sys.add_ge(coeffs2(0, 1), itv.hi(), false);
                constrain_member(sys, coeffs2(1, 1), j);
                Interval window = fit_shifts(k, itv);
                sys.add_ge(coeffs2(1, 0), window.lo(), !window.lo_closed());
                sys.add_le(coeffs2(1, 0), window.hi(), !window.hi_closed());
                if (window.is_empty()) sys.mark_infeasible();
                Interval r = sys.eliminate(1).solve_single(0);
                if (!r.is_empty()) out.push_back(r);
            }
        }
    }

    if (sem_ == Semantics::New) {
        // Disjunct 3: some t1 in close_left(itv) and t2 in itv beyond t1 such
        // that s2 covers itv up to t1 and s1 covers (t1, t2].
        for (const Interval& j : s1.members()) {
            if (itv.inf().is_finite() && !itv.lo_closed()) {
                // t1 = inf itv, not in itv: nothing to check on the s2 side.
                LinearSystem sys(2);  // vars: t, t2
                sys.add_ge(coeffs2(0, 1), itv.lo(), true);              // t2 in itv, above t1 = lo
                sys.add_le(coeffs2(0, 1), itv.hi(), !itv.hi_closed());
                sys.add_ge(coeffs2(1, 0), j.lo() - itv.lo(), false);    // t + t1 >= lo j
                sys.add_le(coeffs2(1, 1), j.hi(), !j.hi_closed());      // t + t2 <= hi j
                Interval r = sys.eliminate(1).solve_single(0);
                if (!r.is_empty()) out.push_back(r);
            }
            for (const Interval& k : s2.members()) {
                LinearSystem sys(3);  // vars: t, t1, t2
                sys.add_ge(coeffs3(0, 1, 0), itv.lo(), !itv.lo_closed());   // t1 in itv
                sys.add_le(coeffs3(0, 1, 0), itv.hi(), !itv.hi_closed());
                sys.add_ge(coeffs3(0, -1, 1), TimeBound(kZero), true);      // t2 > t1
                sys.add_le(coeffs3(0, 0, 1), itv.hi(), !itv.hi_closed());   // t2 in itv
                // s2 covers itv up to t1 (supremum attained at t1).
                sys.add_ge(coeffs3(1, 0, 0), k.lo() - itv.lo(), !k.lo_closed() && itv.lo_closed());
                sys.add_le(coeffs3(1, 1, 0), k.hi(), !k.hi_closed());
                // s1 covers (t1, t2].
                sys.add_ge(coeffs3(1, 1, 0), j.lo(), false);
                sys.add_le(coeffs3(1, 0, 1), j.hi(), !j.hi_closed());
                Interval r = sys.eliminate(2).eliminate(1).solve_single(0);
                if (!r.is_empty()) out.push_back(r);
            }
        }
    }

    return IntervalSet::of(std::move(out)).intersect(Interval::nonneg());
}

IntervalSet truth_set(const Signal& f, const Formula& phi, Semantics sem) {
    Evaluator ev(f, sem);
    return ev.truth_set(phi);
}

bool sat(const Signal& f, const Formula& phi, Semantics sem) {
    return truth_set(f, phi, sem).contains(Rational(0));
}

IntervalSet next_truth_set(const IntervalSet& s) {
    std::vector<Interval> out;
    for (const Interval& m : s.members()) {
        if (m.width() > TimeBound(kZero)) {
            out.push_back(Interval(m.lo(), m.hi(), true, false));
        }
    }
    return IntervalSet::of(std::move(out));
}

bool fvar_at(const IntervalSet& s, const Rational& r, Side side) {
    if (side == Side::Left && !r.is_positive()) {
        throw std::invalid_argument("fvar_at: the left side requires r > 0");
    }
    if (r.is_negative()) throw std::invalid_argument("fvar_at: negative time");
    const std::vector<Rational> bps = s.breakpoints();
    Rational eps = side == Side::Left ? mitl::min(r, kOne) : kOne;
    for (const Rational& b : bps) {
        if (side == Side::Right && b > r) {
            eps = mitl::min(eps, b - r);
            break;
        }
        if (side == Side::Left && b < r) eps = mitl::min(eps, r - b);
    }
    // No breakpoint of s lies strictly within eps of r on the probed side, so
    // membership is constant there: the antecedent reduces to one membership
    // probe and the consequent to one open-interval containment check.
    const Rational probe = side == Side::Right ? r + eps * Rational(1, 2) : r - eps * Rational(1, 2);
    const bool antecedent = s.contains(probe);
    const bool consequent = side == Side::Right
                                ? s.contains_open(TimeBound(r), TimeBound(r + eps))
                                : s.contains_open(TimeBound(r - eps), TimeBound(r));
    return !antecedent || consequent;
}

DualityReport duality_check(const Signal& f, const Formula& phi, Semantics sem) {
    DualityReport report;
    report.formula = phi;
    report.semantics = sem;
    report.set_phi = truth_set(f, phi, sem);
    report.set_nnf = truth_set(f, phi.nnf(), sem);
    report.mismatch = report.set_phi.symmetric_difference(report.set_nnf);
    report.equal = report.mismatch.is_empty();
    return report;
}

BridgeReport bridge_check(const Signal& f, const Formula& phi) {
    BridgeReport report;
    report.formula = phi;
    report.rewritten = phi.to_old();
    report.set_new = truth_set(f, phi, Semantics::New);
    report.set_old_rewritten = truth_set(f, report.rewritten, Semantics::Old);
    report.mismatch = report.set_new.symmetric_difference(report.set_old_rewritten);
    report.equal = report.mismatch.is_empty();
    return report;
}

AgreementReport engine_oracle_agreement(const Signal& f, const Formula& phi, Semantics sem) {
    Evaluator ev(f, sem);
    const IntervalSet& top = ev.truth_set(phi);

    std::vector<Rational> grid = f.breakpoints();
    for (const auto& [node, set] : ev.cache()) {
        for (const Rational& b : set.breakpoints()) grid.push_back(b);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<Rational> points;
    points.push_back(kZero);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!grid[i].is_negative()) points.push_back(grid[i]);
        if (i + 1 < grid.size()) {
            const Rational mid = midpoint(grid[i], grid[i + 1]);
            if (!mid.is_negative()) points.push_back(mid);
        }
    }
    points.push_back(grid.empty() ? kOne : grid.back() + kOne);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    AgreementReport report;
    Oracle oracle(f);
    for (const Rational& t : points) {
        ++report.points_checked;
        if (oracle.sat_at(phi, t, sem) != top.contains(t)) {
            report.agree = false;
            report.first_disagreement = t;
            break;
        }
    }
    return report;
}

bool oracle_sat(const Signal& f, const Formula& phi, const Rational& t, Semantics sem) {
    Oracle oracle(f);
    return oracle.sat_at(phi, t, sem);
}

}  // namespace mitl
