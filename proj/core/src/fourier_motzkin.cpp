#include "mitl/fourier_motzkin.hpp"

#include <cassert>
#include <stdexcept>

namespace mitl {

void LinearSystem::add_le(std::vector<Rational> coef, const Rational& rhs, bool strict) {
    assert(static_cast<int>(coef.size()) == num_vars_);
    rows_.push_back(Row{std::move(coef), rhs, strict});
}

void LinearSystem::add_le(std::vector<Rational> coef, const TimeBound& bound, bool strict) {
    if (bound.is_pos_inf()) return;
    if (bound.is_neg_inf()) {
        infeasible_ = true;
        return;
    }
    add_le(std::move(coef), bound.finite(), strict);
}

void LinearSystem::add_ge(std::vector<Rational> coef, const TimeBound& bound, bool strict) {
    if (bound.is_neg_inf()) return;
    if (bound.is_pos_inf()) {
        infeasible_ = true;
        return;
    }
    for (Rational& c : coef) c = -c;
    add_le(std::move(coef), -bound.finite(), strict);
}

void LinearSystem::add_eq(const std::vector<Rational>& coef, const Rational& rhs) {
    add_le(coef, rhs, false);
    std::vector<Rational> neg(coef);
    for (Rational& c : neg) c = -c;
    add_le(std::move(neg), -rhs, false);
}

LinearSystem LinearSystem::eliminate(int var) const {
    LinearSystem out(num_vars_);
    if (infeasible_) {
        out.infeasible_ = true;
        return out;
    }
    std::vector<const Row*> uppers, lowers;
    for (const Row& r : rows_) {
        const Rational& c = r.coef[var];
        if (c.is_zero()) {
            out.rows_.push_back(r);
        } else if (c.is_positive()) {
            uppers.push_back(&r);
        } else {
            lowers.push_back(&r);
        }
    }
    for (const Row* up : uppers) {
        for (const Row* lo : lowers) {
            // Positive combination cancelling the variable:
            // (-lo.c) * up + up.c * lo.
            const Rational a = -lo->coef[var];
            const Rational b = up->coef[var];
            Row combined;
            combined.coef.reserve(num_vars_);
            for (int i = 0; i < num_vars_; ++i) {
                combined.coef.push_back(a * up->coef[i] + b * lo->coef[i]);
            }
            combined.rhs = a * up->rhs + b * lo->rhs;
            combined.strict = up->strict || lo->strict;
            out.rows_.push_back(std::move(combined));
        }
    }
    return out;
}

bool LinearSystem::feasible() const {
    if (infeasible_) return false;
    LinearSystem sys = *this;
    for (int v = 0; v < num_vars_; ++v) sys = sys.eliminate(v);
    for (const Row& r : sys.rows_) {
        // All coefficients are zero now: 0 (< | <=) rhs.
        if (r.rhs.is_negative()) return false;
        if (r.strict && r.rhs.is_zero()) return false;
    }
    return true;
}

Interval LinearSystem::solve_single(int var) const {
    if (infeasible_) return Interval::empty();
    TimeBound lo = TimeBound::neg_inf();
    bool lo_closed = false;
    TimeBound hi = TimeBound::pos_inf();
    bool hi_closed = false;
    for (const Row& r : rows_) {
        for (int i = 0; i < num_vars_; ++i) {
            if (i != var && !r.coef[i].is_zero()) {
                throw std::logic_error("solve_single: system still mentions another variable");
            }
        }
        const Rational& c = r.coef[var];
        if (c.is_zero()) {
            if (r.rhs.is_negative() || (r.strict && r.rhs.is_zero())) return Interval::empty();
            continue;
        }
        const Rational bound = r.rhs / c;
        const TimeBound b{bound};
        if (c.is_positive()) {
            if (b < hi) {
                hi = b;
                hi_closed = !r.strict;
            } else if (b == hi && r.strict) {
                hi_closed = false;
            }
        } else {
            if (b > lo) {
                lo = b;
                lo_closed = !r.strict;
            } else if (b == lo && r.strict) {
                lo_closed = false;
            }
        }
    }
    return Interval(lo, hi, lo_closed, hi_closed);
}

}  // namespace mitl
