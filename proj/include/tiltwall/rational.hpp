#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tiltwall {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always kept in canonical form:
/// numerator and denominator coprime, denominator strictly positive.
///
/// The text form is "p/q" or "p" (ASCII digits, optional leading '-' on the
/// numerator only, no whitespace). parse() accepts exactly that grammar and
/// to_string() emits it, so the two functions round-trip.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational parse(const std::string& text);
    std::string to_string() const;

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Integer floor() const;
    Integer ceil() const;
    Rational abs() const;

    /// Conversion for the rendering boundary only; the engine itself never
    /// rounds.
    double to_double() const { return q_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Strict decimal integer parse: optional '-', then digits, nothing else.
Integer parse_integer(const std::string& text);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);

/// Some rational u with u >= sqrt(q), for q >= 0.  Used only to size finite
/// search boxes; never as a substitute for an exact comparison.
Rational sqrt_upper(const Rational& q);

/// Exact three-way comparison of t against sqrt(q), q >= 0.
/// Returns -1, 0 or +1.  Decided by sign analysis plus squaring.
int cmp_with_sqrt(const Rational& t, const Rational& q);

}  // namespace tiltwall
