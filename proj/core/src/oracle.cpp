#include "mitl/eval.hpp"

#include <algorithm>

// Pointwise decision of the satisfaction relations, independent of the
// interval-algebra engine in eval.cpp. Each quantifier is decided by walking
// ascending representatives of the cells that the critical points induce:
// on every open cell between adjacent critical points the truth of a
// subformula is constant, so one interior probe per cell is exact.

namespace mitl {

namespace {

const Rational kZero{0};
const Rational kOne{1};

struct ScanPoint {
    Rational value;
    bool is_anchor;  // a cell boundary rather than a cell interior point
};

// Ascending representatives of `domain` relative to the sorted `grid`:
// every grid point and finite domain endpoint inside the domain, one interior
// point per cell, and one point in each unbounded tail.
std::vector<ScanPoint> scan_points(const std::vector<Rational>& grid, const Interval& domain) {
    std::vector<ScanPoint> out;
    if (domain.is_empty()) return out;

    std::vector<Rational> anchors;
    if (domain.lo().is_finite()) anchors.push_back(domain.lo().finite());
    for (const Rational& g : grid) {
        if (TimeBound(g) < domain.lo() || TimeBound(g) > domain.hi()) continue;
        anchors.push_back(g);
    }
    if (domain.hi().is_finite()) anchors.push_back(domain.hi().finite());
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

    if (anchors.empty()) {
        // Fully unbounded domain with no grid inside.
        out.push_back({kZero, false});
        return out;
    }
    if (domain.lo().is_neg_inf()) out.push_back({anchors.front() - kOne, false});
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (domain.contains(anchors[i])) out.push_back({anchors[i], true});
        if (i + 1 < anchors.size()) {
            Rational mid = midpoint(anchors[i], anchors[i + 1]);
            if (domain.contains(mid)) out.push_back({mid, false});
        }
    }
    if (domain.hi().is_pos_inf()) out.push_back({anchors.back() + kOne, false});
    return out;
}

}  // namespace

const std::vector<Rational>& Oracle::critical_points(const Formula& phi) {
    auto it = crit_cache_.find(phi.node());
    if (it != crit_cache_.end()) return it->second;
    std::vector<Rational> pts;
    switch (phi.op()) {
        case Formula::Op::Top:
        case Formula::Op::Bottom: break;
        case Formula::Op::Atom: pts = signal_->breakpoints(); break;
        case Formula::Op::Not: pts = critical_points(phi.lhs()); break;
        case Formula::Op::Or:
        case Formula::Op::And: {
            pts = critical_points(phi.lhs());
            const auto& r = critical_points(phi.rhs());
            pts.insert(pts.end(), r.begin(), r.end());
            break;
        }
        case Formula::Op::Until:
        case Formula::Op::Release: {
            std::vector<Rational> base = critical_points(phi.lhs());
            const auto& r = critical_points(phi.rhs());
            base.insert(base.end(), r.begin(), r.end());
            std::vector<Rational> offsets{kZero};
            const Interval& itv = phi.interval();
            if (!itv.is_empty()) {
                offsets.push_back(itv.lo().finite());
                if (itv.hi().is_finite()) offsets.push_back(itv.hi().finite());
            }
            for (const Rational& b : base) {
                for (const Rational& e : offsets) {
                    Rational p = b - e;
                    if (!p.is_negative()) pts.push_back(p);
                }
            }
            break;
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return crit_cache_.emplace(phi.node(), std::move(pts)).first->second;
}

bool Oracle::sat_at(const Formula& phi, const Rational& t, Semantics sem) {
    if (t.is_negative()) throw std::invalid_argument("oracle_sat: negative time");
    return eval(phi, t, sem);
}

bool Oracle::eval(const Formula& phi, const Rational& t, Semantics sem) {
    using Op = Formula::Op;
    switch (phi.op()) {
        case Op::Top: return true;
        case Op::Bottom: return false;
        case Op::Atom: return signal_->value_at(t).count(phi.atom_name()) != 0;
        case Op::Not: return !eval(phi.lhs(), t, sem);
        case Op::Or: return eval(phi.lhs(), t, sem) || eval(phi.rhs(), t, sem);
        case Op::And: return eval(phi.lhs(), t, sem) && eval(phi.rhs(), t, sem);
        default: break;
    }

    const Key key{phi.node(), t, sem};
    if (auto it = value_cache_.find(key); it != value_cache_.end()) return it->second;

    const Interval& itv = phi.interval();
    const Formula lhs = phi.lhs();
    const Formula rhs = phi.rhs();

    // Quantified offsets relative to t; cells change where a child's truth
    // changes (shifted by t) or at the decoration endpoints.
    std::vector<Rational> grid;
    for (const Formula* child : {&lhs, &rhs}) {
        for (const Rational& g : critical_points(*child)) grid.push_back(g - t);
    }
    grid.push_back(kZero);
    if (!itv.is_empty()) {
        grid.push_back(itv.lo().finite());
        if (itv.hi().is_finite()) grid.push_back(itv.hi().finite());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    bool result = false;
    if (phi.op() == Op::Until) {
        // exists x in itv: rhs at t+x and lhs throughout (t, t+x).
        if (itv.contains(kZero) && eval(rhs, t, sem)) {
            result = true;
        } else if (!itv.is_empty()) {
            bool lhs_prefix = true;
            for (const ScanPoint& p : scan_points(grid, Interval::greater_than(kZero))) {
                if (TimeBound(p.value) > itv.sup()) break;
                if (itv.contains(p.value) && lhs_prefix && eval(rhs, t + p.value, sem) &&
                    (p.is_anchor || eval(lhs, t + p.value, sem))) {
                    result = true;
                    break;
                }
                lhs_prefix = lhs_prefix && eval(lhs, t + p.value, sem);
                if (!lhs_prefix) break;
            }
        }
    } else {
        // Universal disjunct: rhs throughout t + itv.
        result = true;
        for (const ScanPoint& p : scan_points(grid, itv)) {
            if (!eval(rhs, t + p.value, sem)) {
                result = false;
                break;
            }
        }
        // Existential disjunct: some x > 0 with lhs at t+x and rhs throughout
        // t + (itv up to x, inclusive).
        if (!result) {
            bool rhs_prefix = !itv.contains(kZero) || eval(rhs, t, sem);
            for (const ScanPoint& p : scan_points(grid, Interval::greater_than(kZero))) {
                const bool in_itv = itv.contains(p.value);
                const bool here_ok = !in_itv || eval(rhs, t + p.value, sem);
                if (rhs_prefix && here_ok && eval(lhs, t + p.value, sem)) {
                    result = true;
                    break;
                }
                rhs_prefix = rhs_prefix && here_ok;
                if (!rhs_prefix) break;
            }
        }
        // Third disjunct (New only): some x in close_left(itv) and y in itv
        // beyond x with rhs throughout itv up to x and lhs throughout (x, y].
        if (!result && sem == Semantics::New && !itv.is_empty()) {
            const std::vector<ScanPoint> pts = scan_points(grid, itv.close_left());
            bool rhs_prefix = true;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const Rational& x = pts[i].value;
                const bool in_itv = itv.contains(x);
                const bool here_ok = !in_itv || eval(rhs, t + x, sem);
                if (rhs_prefix && here_ok && TimeBound(x) < itv.sup()) {
                    // lhs on a right neighborhood of x; the probe lives in the
                    // cell just beyond x.
                    bool after;
                    if (!pts[i].is_anchor) {
                        after = eval(lhs, t + x, sem);
                    } else if (i + 1 < pts.size()) {
                        after = eval(lhs, t + pts[i + 1].value, sem);
                    } else {
                        after = false;  // no room before sup itv
                    }
                    if (after) {
                        result = true;
                        break;
                    }
                }
                rhs_prefix = rhs_prefix && here_ok;
                if (!rhs_prefix) break;
            }
        }
    }

    value_cache_.emplace(key, result);
    return result;
}

}  // namespace mitl
