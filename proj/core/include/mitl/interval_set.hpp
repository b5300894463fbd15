#pragma once

#include "mitl/interval.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mitl {

/// A finite union of intervals kept in canonical form: members are non-empty,
/// pairwise disjoint, sorted, and no two of them can be merged into a single
/// interval. Truth sets of formulas over a signal live here.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(std::initializer_list<Interval> members);
    explicit IntervalSet(const Interval& single);
    /// Canonicalizes an arbitrary collection of intervals.
    static IntervalSet of(std::vector<Interval> members);

    static IntervalSet empty_set() { return IntervalSet(); }
    static IntervalSet nonneg() { return IntervalSet(Interval::nonneg()); }

    const std::vector<Interval>& members() const { return members_; }
    bool is_empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    bool contains(const Rational& t) const;
    /// True when the interval is a subset of this set.
    bool contains_interval(const Interval& i) const;
    /// True when the open interval (a, b) is a subset of this set
    /// (vacuously true when a >= b).
    bool contains_open(const TimeBound& a, const TimeBound& b) const;

    /// There is an epsilon > 0 with (w - epsilon, w) inside the set.
    bool left_limit_in(const Rational& w) const;
    /// There is an epsilon > 0 with (w, w + epsilon) inside the set.
    bool right_limit_in(const Rational& w) const;

    TimeBound inf() const { return members_.empty() ? TimeBound::pos_inf() : members_.front().inf(); }
    TimeBound sup() const { return members_.empty() ? TimeBound::neg_inf() : members_.back().sup(); }

    IntervalSet union_with(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet intersect(const Interval& window) const;
    /// Complement relative to [0, +inf).
    IntervalSet complement_within_nonneg() const;
    IntervalSet set_minus(const IntervalSet& other) const;
    IntervalSet symmetric_difference(const IntervalSet& other) const;
    /// Translation by r (which may be negative).
    IntervalSet shift_by(const Rational& r) const;
    /// Member-wise Minkowski sum with one interval.
    IntervalSet minkowski_add(const Interval& i) const;

    /// All finite endpoint values of the members, sorted and distinct.
    std::vector<Rational> breakpoints() const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.members_ == b.members_; }

    std::string str() const;

private:
    std::vector<Interval> members_;
};

/// Union of the closed balls [a - eps, a + eps] around the given points.
IntervalSet eps_ball(const std::vector<Rational>& points, const Rational& eps);

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace mitl
