#include "mitl/interval_set.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mitl {

namespace {

bool starts_before(const Interval& a, const Interval& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    if (a.lo_closed() != b.lo_closed()) return a.lo_closed();
    if (a.hi() != b.hi()) return a.hi() < b.hi();
    return b.hi_closed() && !a.hi_closed();
}

}  // namespace

IntervalSet IntervalSet::of(std::vector<Interval> members) {
    std::erase_if(members, [](const Interval& i) { return i.is_empty(); });
    std::sort(members.begin(), members.end(), starts_before);
    IntervalSet out;
    for (const Interval& i : members) {
        if (!out.members_.empty() && out.members_.back().mergeable_with(i)) {
            out.members_.back() = out.members_.back().merge(i);
        } else {
            out.members_.push_back(i);
        }
    }
    return out;
}

IntervalSet::IntervalSet(std::initializer_list<Interval> members) {
    *this = of(std::vector<Interval>(members));
}

IntervalSet::IntervalSet(const Interval& single) {
    if (!single.is_empty()) members_.push_back(single);
}

bool IntervalSet::contains(const Rational& t) const {
    for (const Interval& i : members_) {
        if (i.contains(t)) return true;
        if (i.lo() > TimeBound(t)) break;
    }
    return false;
}

bool IntervalSet::contains_interval(const Interval& i) const {
    if (i.is_empty()) return true;
    // Members are separated, so a connected subset fits inside one member.
    for (const Interval& m : members_) {
        if (m.contains(i)) return true;
    }
    return false;
}

bool IntervalSet::contains_open(const TimeBound& a, const TimeBound& b) const {
    if (a >= b) return true;
    for (const Interval& m : members_) {
        if (m.inf() <= a && b <= m.sup()) return true;
    }
    return false;
}

bool IntervalSet::left_limit_in(const Rational& w) const {
    const TimeBound t{w};
    for (const Interval& m : members_) {
        if (m.inf() < t && t <= m.sup()) return true;
    }
    return false;
}

bool IntervalSet::right_limit_in(const Rational& w) const {
    const TimeBound t{w};
    for (const Interval& m : members_) {
        if (m.inf() <= t && t < m.sup()) return true;
    }
    return false;
}

IntervalSet IntervalSet::union_with(const IntervalSet& other) const {
    std::vector<Interval> all = members_;
    all.insert(all.end(), other.members_.begin(), other.members_.end());
    return of(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const Interval& a : members_) {
        for (const Interval& b : other.members_) {
            Interval c = a.intersect(b);
            if (!c.is_empty()) out.push_back(c);
        }
    }
    return of(std::move(out));
}

IntervalSet IntervalSet::intersect(const Interval& window) const {
    return intersect(IntervalSet(window));
}

IntervalSet IntervalSet::complement_within_nonneg() const {
    std::vector<Interval> out;
    TimeBound cursor{Rational(0)};
    bool cursor_closed = true;  // next gap may include the cursor point
    for (const Interval& m : members_) {
        Interval gap(cursor, m.inf(), cursor_closed, !m.lo_closed());
        if (!gap.is_empty()) out.push_back(gap);
        if (m.sup() > cursor || (m.sup() == cursor && m.hi_closed())) {
            cursor = m.sup();
            cursor_closed = !m.hi_closed();
        }
        if (cursor.is_pos_inf()) break;
    }
    if (!cursor.is_pos_inf()) {
        out.push_back(Interval(cursor, TimeBound::pos_inf(), cursor_closed, false));
    }
    return of(std::move(out));
}

IntervalSet IntervalSet::set_minus(const IntervalSet& other) const {
    // a \ b within [0, inf) is enough for truth sets, but keep it exact for
    // arbitrary sets by complementing member by member.
    std::vector<Interval> out;
    for (const Interval& a : members_) {
        std::vector<Interval> pieces{a};
        for (const Interval& b : other.members_) {
            std::vector<Interval> next;
            for (const Interval& p : pieces) {
                Interval mid = p.intersect(b);
                if (mid.is_empty()) {
                    next.push_back(p);
                    continue;
                }
                Interval left(p.lo(), mid.inf(), p.lo_closed(), !mid.lo_closed());
                Interval right(mid.sup(), p.hi(), !mid.hi_closed(), p.hi_closed());
                if (!left.is_empty()) next.push_back(left);
                if (!right.is_empty()) next.push_back(right);
            }
            pieces = std::move(next);
        }
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    return of(std::move(out));
}

IntervalSet IntervalSet::symmetric_difference(const IntervalSet& other) const {
    return set_minus(other).union_with(other.set_minus(*this));
}

IntervalSet IntervalSet::shift_by(const Rational& r) const {
    std::vector<Interval> out;
    out.reserve(members_.size());
    for (const Interval& m : members_) out.push_back(m.shift(r));
    return of(std::move(out));
}

IntervalSet IntervalSet::minkowski_add(const Interval& i) const {
    std::vector<Interval> out;
    out.reserve(members_.size());
    for (const Interval& m : members_) out.push_back(m.minkowski_sum(i));
    return of(std::move(out));
}

std::vector<Rational> IntervalSet::breakpoints() const {
    std::vector<Rational> out;
    for (const Interval& m : members_) {
        if (m.lo().is_finite()) out.push_back(m.lo().finite());
        if (m.hi().is_finite()) out.push_back(m.hi().finite());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string IntervalSet::str() const {
    if (members_.empty()) return "{}";
    std::string s;
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k) s += " u ";
        s += members_[k].str();
    }
    return s;
}

IntervalSet eps_ball(const std::vector<Rational>& points, const Rational& eps) {
    if (eps.is_negative()) throw std::invalid_argument("eps_ball: negative radius");
    std::vector<Interval> out;
    out.reserve(points.size());
    for (const Rational& a : points) out.push_back(Interval::closed(a - eps, a + eps));
    return IntervalSet::of(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) { return os << s.str(); }

}  // namespace mitl
