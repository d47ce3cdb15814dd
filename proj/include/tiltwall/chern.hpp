#pragma once

#include "tiltwall/rational.hpp"
#include "tiltwall/surface.hpp"

#include <string>

namespace tiltwall {

enum class Ordering { Less, Equal, Greater };

/// Numerical Chern data of an object on the polarized surface, in the
/// projection used throughout: (rank, deg, ch2) = (ch_0, H.ch_1, ch_2).
/// Values are exact; deg and ch2 may be any rationals (shifted and formal
/// difference classes carry negative entries).
struct ChernClass {
    Integer rank;
    Rational deg;
    Rational ch2;

    friend bool operator==(const ChernClass& a, const ChernClass& b) {
        return a.rank == b.rank && a.deg == b.deg && a.ch2 == b.ch2;
    }
    friend bool operator!=(const ChernClass& a, const ChernClass& b) { return !(a == b); }

    ChernClass operator-() const { return {Integer(-rank), -deg, -ch2}; }
    friend ChernClass operator+(const ChernClass& a, const ChernClass& b) {
        return {Integer(a.rank + b.rank), a.deg + b.deg, a.ch2 + b.ch2};
    }
    friend ChernClass operator-(const ChernClass& a, const ChernClass& b) {
        return {Integer(a.rank - b.rank), a.deg - b.deg, a.ch2 - b.ch2};
    }

    bool is_zero() const { return rank == 0 && deg.is_zero() && ch2.is_zero(); }
};

/// a*x + b*y with integer weights.
ChernClass linear_combine(const Integer& a, const ChernClass& x, const Integer& b, const ChernClass& y);

/// Parse "r,d,c" with r an integer and d, c rationals; to_string inverts it.
ChernClass parse_chern(const std::string& text);
std::string to_string(const ChernClass& x);

/// A value in Q union {+infinity}; +infinity is the slope of rank-zero
/// classes and compares greater than every rational, equal to itself.
class Slope {
public:
    Slope(const Rational& v) : finite_(true), v_(v) {}
    static Slope infinity() { return Slope(); }

    bool is_infinite() const { return !finite_; }
    const Rational& value() const;

    friend bool operator==(const Slope& a, const Slope& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (!a.finite_) return false;
        return !b.finite_ || a.v_ < b.v_;
    }
    friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
    friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
    friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }

    std::string to_string() const { return finite_ ? v_.to_string() : "+inf"; }

private:
    Slope() : finite_(false), v_(0) {}
    bool finite_;
    Rational v_;
};

/// mu_H = deg / rank; +infinity for rank zero.
Slope slope(const ChernClass& x);

/// H-discriminant: deg^2 - 2 * ch2 * rank.  Invariant under negation.
Rational discriminant(const ChernClass& x);

/// chi(x) = ch2 + (lambda/2) * deg + rank * chi(O).
Rational euler_characteristic(const Surface& s, const ChernClass& x);

/// True iff discriminant(x) >= 0.
bool bogomolov_check(const ChernClass& x);

/// ch(x) * exp(k H): rank fixed, deg += k * rank * H^2,
/// ch2 += k * deg + (k^2/2) * rank * H^2.
ChernClass twist(const Surface& s, const ChernClass& x, const Rational& k);

/// chi(x twisted by (t + delta) H) / rank as a quadratic in t, or the formal
/// +infinity polynomial for rank zero.
struct ReducedHilbertPolynomial {
    bool finite;
    Rational c2, c1, c0;  // c2 t^2 + c1 t + c0 when finite

    static ReducedHilbertPolynomial plus_infinity() { return {false, Rational(0), Rational(0), Rational(0)}; }

    friend bool operator==(const ReducedHilbertPolynomial& a, const ReducedHilbertPolynomial& b) {
        if (a.finite != b.finite) return false;
        return !a.finite || (a.c2 == b.c2 && a.c1 == b.c1 && a.c0 == b.c0);
    }
};

ReducedHilbertPolynomial reduced_hilbert_polynomial(const Surface& s, const ChernClass& x, const Rational& delta);

/// Lexicographic comparison from the top coefficient down; the +infinity
/// polynomial dominates every finite one and equals itself.
Ordering gieseker_compare(const ReducedHilbertPolynomial& p, const ReducedHilbertPolynomial& q);

/// rank integral (by type), deg integral, 2*ch2 integral.
bool is_lattice_class(const ChernClass& x);

}  // namespace tiltwall
