#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace mitl {

/// Exact rational number, always in canonical lowest terms with a positive
/// denominator. Every time constant in this library is a Rational; there is
/// no floating point anywhere on an evaluation path.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}       // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Accepts "p", "-p", "p/q" and exact decimal notation like "0.01"
    /// (converted to 1/100). Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);
    static std::optional<Rational> try_parse(std::string_view text);

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// Largest integer <= *this, as a Rational.
    Rational floor() const;
    /// Smallest integer >= *this, as a Rational.
    Rational ceil() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return ::cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = ::cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::size_t hash() const;

    /// Number of bits in the binary representation of the numerator magnitude
    /// plus the denominator (0 is counted as one bit).
    std::size_t bit_size() const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// max(a - b, 0).
inline Rational monus(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return d.is_negative() ? Rational(0) : d;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) * Rational(1, 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mitl

template <>
struct std::hash<mitl::Rational> {
    std::size_t operator()(const mitl::Rational& r) const noexcept { return r.hash(); }
};
