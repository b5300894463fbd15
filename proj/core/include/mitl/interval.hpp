#pragma once

#include "mitl/rational.hpp"

#include <cassert>
#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace mitl {

/// A time value extended with the two infinities: -inf < every rational < +inf.
class TimeBound {
public:
    enum class Kind { NegInf, Finite, PosInf };

    TimeBound() : kind_(Kind::Finite), value_(0) {}
    TimeBound(Rational r) : kind_(Kind::Finite), value_(std::move(r)) {}  // NOLINT
    static TimeBound neg_inf() { return TimeBound(Kind::NegInf); }
    static TimeBound pos_inf() { return TimeBound(Kind::PosInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    Kind kind() const { return kind_; }

    /// Finite value; must not be called on an infinity.
    const Rational& finite() const {
        assert(is_finite());
        return value_;
    }

    friend bool operator==(const TimeBound& a, const TimeBound& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const TimeBound& a, const TimeBound& b) {
        auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : k == Kind::Finite ? 1 : 2; };
        if (rank(a.kind_) != rank(b.kind_)) return rank(a.kind_) <=> rank(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    /// Addition; the two infinities must not be mixed.
    friend TimeBound operator+(const TimeBound& a, const TimeBound& b);
    friend TimeBound operator-(const TimeBound& a, const TimeBound& b);
    TimeBound operator-() const;

    std::string str() const;

private:
    explicit TimeBound(Kind k) : kind_(k), value_(0) {}

    Kind kind_;
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const TimeBound& b);

/// An interval of real time values with independently open or closed
/// endpoints. Construction normalizes: infinite endpoints are always open,
/// and every empty interval is represented as the open interval (0,0).
class Interval {
public:
    /// The canonical empty interval (0,0).
    Interval();
    Interval(TimeBound lo, TimeBound hi, bool lo_closed, bool hi_closed);

    static Interval closed(Rational lo, Rational hi) { return Interval(lo, hi, true, true); }
    static Interval open(Rational lo, Rational hi) { return Interval(lo, hi, false, false); }
    static Interval left_open(Rational lo, Rational hi) { return Interval(lo, hi, false, true); }
    static Interval right_open(Rational lo, Rational hi) { return Interval(lo, hi, true, false); }
    static Interval singleton(Rational v) { return Interval(v, v, true, true); }
    static Interval empty() { return Interval(); }
    /// [lo, +inf)
    static Interval at_least(Rational lo) { return Interval(lo, TimeBound::pos_inf(), true, false); }
    /// (lo, +inf)
    static Interval greater_than(Rational lo) { return Interval(lo, TimeBound::pos_inf(), false, false); }
    /// [0, +inf)
    static Interval nonneg() { return at_least(Rational(0)); }
    /// (-inf, +inf)
    static Interval all_reals() { return Interval(TimeBound::neg_inf(), TimeBound::pos_inf(), false, false); }

    const TimeBound& lo() const { return lo_; }
    const TimeBound& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    bool is_empty() const;
    bool is_singleton() const;

    /// Infimum per the convention inf(empty) = +inf.
    TimeBound inf() const { return is_empty() ? TimeBound::pos_inf() : lo_; }
    /// Supremum per the convention sup(empty) = -inf.
    TimeBound sup() const { return is_empty() ? TimeBound::neg_inf() : hi_; }
    /// sup - inf; the width of the empty interval is -inf.
    TimeBound width() const;

    bool contains(const Rational& t) const;
    bool contains(const Interval& other) const;  // other subseteq *this
    bool intersects(const Interval& other) const;

    /// Closed from the left in the definitional sense: the infimum is not a
    /// real number, or it belongs to the interval.
    bool left_closed_def() const { return !lo_.is_finite() || lo_closed_; }
    bool right_closed_def() const { return !hi_.is_finite() || hi_closed_; }

    /// The interval minus both of its endpoints.
    Interval open_core() const;
    /// The interval together with its infimum (finite infima only).
    Interval close_left() const;
    /// The interval together with its supremum (finite suprema only).
    Interval close_right() const;
    /// close_left, minus the supremum.
    Interval open_r_close_l() const;
    /// close_right, minus the infimum.
    Interval open_l_close_r() const;

    Interval intersect(const Interval& other) const;
    /// {a + b : a in *this, b in other}.
    Interval minkowski_sum(const Interval& other) const;
    /// {-a : a in *this}.
    Interval negate() const;
    /// {a + r : a in *this}.
    Interval shift(const Rational& r) const;

    /// True if the union of the two intervals is itself an interval.
    bool mergeable_with(const Interval& other) const;
    /// Union, provided mergeable_with(other).
    Interval merge(const Interval& other) const;

    friend bool operator==(const Interval& a, const Interval& b);

    /// "[a,b]", "(a,b)", "[a,b)", "(a,b]" with "inf" / "-inf" for infinities.
    std::string str() const;
    /// Parses the text form. Throws std::invalid_argument on malformed input.
    static Interval parse(std::string_view text);
    static std::optional<Interval> try_parse(std::string_view text);

private:
    TimeBound lo_, hi_;
    bool lo_closed_, hi_closed_;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);

/// {t : t + piece is a subset of target}, as an interval of (possibly
/// negative) shifts. The result is all of R when piece is empty.
Interval fit_shifts(const Interval& target, const Interval& piece);

}  // namespace mitl
