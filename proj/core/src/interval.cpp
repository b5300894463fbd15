#include "mitl/interval.hpp"

#include <ostream>
#include <stdexcept>

namespace mitl {

TimeBound operator+(const TimeBound& a, const TimeBound& b) {
    using K = TimeBound::Kind;
    if (a.kind_ == K::Finite && b.kind_ == K::Finite) return TimeBound(a.value_ + b.value_);
    if (a.kind_ == K::PosInf || b.kind_ == K::PosInf) {
        if (a.kind_ == K::NegInf || b.kind_ == K::NegInf) {
            throw std::logic_error("TimeBound: inf + -inf is undefined");
        }
        return TimeBound::pos_inf();
    }
    return TimeBound::neg_inf();
}

TimeBound TimeBound::operator-() const {
    switch (kind_) {
        case Kind::NegInf: return pos_inf();
        case Kind::PosInf: return neg_inf();
        case Kind::Finite: return TimeBound(-value_);
    }
    return TimeBound();
}

TimeBound operator-(const TimeBound& a, const TimeBound& b) { return a + (-b); }

std::string TimeBound::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::Finite: return value_.str();
    }
    return {};
}

std::ostream& operator<<(std::ostream& os, const TimeBound& b) { return os << b.str(); }

namespace {

bool bounds_make_empty(const TimeBound& lo, const TimeBound& hi, bool lo_closed, bool hi_closed) {
    if (lo > hi) return true;
    if (lo == hi) {
        if (!lo.is_finite()) return true;  // a point at infinity is not a time
        return !(lo_closed && hi_closed);
    }
    return false;
}

}  // namespace

Interval::Interval() : lo_(Rational(0)), hi_(Rational(0)), lo_closed_(false), hi_closed_(false) {}

Interval::Interval(TimeBound lo, TimeBound hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (!lo_.is_finite()) lo_closed_ = false;
    if (!hi_.is_finite()) hi_closed_ = false;
    if (bounds_make_empty(lo_, hi_, lo_closed_, hi_closed_)) {
        lo_ = TimeBound(Rational(0));
        hi_ = lo_;
        lo_closed_ = hi_closed_ = false;
    }
}

bool Interval::is_empty() const {
    return bounds_make_empty(lo_, hi_, lo_closed_, hi_closed_);
}

bool Interval::is_singleton() const {
    return lo_ == hi_ && lo_.is_finite() && lo_closed_ && hi_closed_;
}

TimeBound Interval::width() const {
    if (is_empty()) return TimeBound::neg_inf();
    return hi_ - lo_;
}

bool Interval::contains(const Rational& t) const {
    if (is_empty()) return false;
    const TimeBound tb{t};
    if (tb < lo_ || (tb == lo_ && !lo_closed_)) return false;
    if (tb > hi_ || (tb == hi_ && !hi_closed_)) return false;
    return true;
}

bool Interval::contains(const Interval& other) const {
    if (other.is_empty()) return true;
    if (is_empty()) return false;
    const bool lo_ok = lo_ < other.lo_ || (lo_ == other.lo_ && (lo_closed_ || !other.lo_closed_));
    const bool hi_ok = hi_ > other.hi_ || (hi_ == other.hi_ && (hi_closed_ || !other.hi_closed_));
    return lo_ok && hi_ok;
}

bool Interval::intersects(const Interval& other) const { return !intersect(other).is_empty(); }

Interval Interval::open_core() const {
    if (is_empty()) return empty();
    return Interval(lo_, hi_, false, false);
}

Interval Interval::close_left() const {
    if (is_empty()) return empty();
    return Interval(lo_, hi_, lo_.is_finite() || lo_closed_, hi_closed_);
}

Interval Interval::close_right() const {
    if (is_empty()) return empty();
    return Interval(lo_, hi_, lo_closed_, hi_.is_finite() || hi_closed_);
}

Interval Interval::open_r_close_l() const {
    if (is_empty()) return empty();
    return Interval(lo_, hi_, lo_.is_finite() || lo_closed_, false);
}

Interval Interval::open_l_close_r() const {
    if (is_empty()) return empty();
    return Interval(lo_, hi_, false, hi_.is_finite() || hi_closed_);
}

Interval Interval::intersect(const Interval& other) const {
    if (is_empty() || other.is_empty()) return empty();
    TimeBound lo = lo_;
    bool lo_c = lo_closed_;
    if (other.lo_ > lo || (other.lo_ == lo && !other.lo_closed_)) {
        lo = other.lo_;
        lo_c = (other.lo_ == lo_) ? (lo_closed_ && other.lo_closed_) : other.lo_closed_;
    }
    TimeBound hi = hi_;
    bool hi_c = hi_closed_;
    if (other.hi_ < hi || (other.hi_ == hi && !other.hi_closed_)) {
        hi = other.hi_;
        hi_c = (other.hi_ == hi_) ? (hi_closed_ && other.hi_closed_) : other.hi_closed_;
    }
    return Interval(lo, hi, lo_c, hi_c);
}

Interval Interval::minkowski_sum(const Interval& other) const {
    if (is_empty() || other.is_empty()) return empty();
    return Interval(lo_ + other.lo_, hi_ + other.hi_,
                    lo_closed_ && other.lo_closed_, hi_closed_ && other.hi_closed_);
}

Interval Interval::negate() const {
    if (is_empty()) return empty();
    return Interval(-hi_, -lo_, hi_closed_, lo_closed_);
}

Interval Interval::shift(const Rational& r) const {
    return minkowski_sum(Interval::singleton(r));
}

bool Interval::mergeable_with(const Interval& other) const {
    if (is_empty() || other.is_empty()) return true;
    auto gap_between = [](const Interval& a, const Interval& b) {
        // True when a ends strictly before b starts, with at least one missing point.
        if (a.hi_ < b.lo_) return true;
        if (a.hi_ == b.lo_) return !a.hi_closed_ && !b.lo_closed_;
        return false;
    };
    return !gap_between(*this, other) && !gap_between(other, *this);
}

Interval Interval::merge(const Interval& other) const {
    if (is_empty()) return other;
    if (other.is_empty()) return *this;
    TimeBound lo = lo_;
    bool lo_c = lo_closed_;
    if (other.lo_ < lo || (other.lo_ == lo && other.lo_closed_)) {
        lo_c = (other.lo_ == lo) ? (lo_closed_ || other.lo_closed_) : other.lo_closed_;
        lo = other.lo_;
    }
    TimeBound hi = hi_;
    bool hi_c = hi_closed_;
    if (other.hi_ > hi || (other.hi_ == hi && other.hi_closed_)) {
        hi_c = (other.hi_ == hi) ? (hi_closed_ || other.hi_closed_) : other.hi_closed_;
        hi = other.hi_;
    }
    return Interval(lo, hi, lo_c, hi_c);
}

bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ && a.hi_closed_ == b.hi_closed_;
}

std::string Interval::str() const {
    std::string s;
    s += lo_closed_ ? '[' : '(';
    s += lo_.str();
    s += ',';
    s += hi_.str();
    s += hi_closed_ ? ']' : ')';
    return s;
}

std::optional<Interval> Interval::try_parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() < 3) return std::nullopt;
    const char open_c = text.front();
    const char close_c = text.back();
    if (open_c != '[' && open_c != '(') return std::nullopt;
    if (close_c != ']' && close_c != ')') return std::nullopt;
    std::string_view body = text.substr(1, text.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) return std::nullopt;

    auto parse_bound = [](std::string_view s, bool is_lo) -> std::optional<TimeBound> {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        if (s == "inf" || s == "+inf") return TimeBound::pos_inf();
        if (s == "-inf") return TimeBound::neg_inf();
        auto r = Rational::try_parse(s);
        if (!r) return std::nullopt;
        (void)is_lo;
        return TimeBound(*r);
    };
    auto lo = parse_bound(body.substr(0, comma), true);
    auto hi = parse_bound(body.substr(comma + 1), false);
    if (!lo || !hi) return std::nullopt;
    return Interval(*lo, *hi, open_c == '[', close_c == ']');
}

Interval Interval::parse(std::string_view text) {
    auto i = try_parse(text);
    if (!i) throw std::invalid_argument("malformed interval: '" + std::string(text) + "'");
    return *i;
}

std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.str(); }

Interval fit_shifts(const Interval& target, const Interval& piece) {
    if (piece.is_empty()) return Interval::all_reals();
    if (target.is_empty()) return Interval::empty();
    TimeBound lo = TimeBound::neg_inf();
    bool lo_closed = false;
    if (target.lo().is_finite()) {
        if (piece.lo().is_neg_inf()) return Interval::empty();
        lo = target.lo() - piece.lo();
        lo_closed = !(!target.lo_closed() && piece.lo_closed());
    }
    TimeBound hi = TimeBound::pos_inf();
    bool hi_closed = false;
    if (piece.hi().is_pos_inf()) {
        if (!target.hi().is_pos_inf()) return Interval::empty();
    } else if (target.hi().is_finite()) {
        hi = target.hi() - piece.hi();
        hi_closed = !(!target.hi_closed() && piece.hi_closed());
    }
    return Interval(lo, hi, lo_closed, hi_closed);
}

}  // namespace mitl
