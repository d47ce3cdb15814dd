#include "tiltwall/tilt.hpp"

#include <stdexcept>

namespace tiltwall {

ProjectiveSlope tilt_slope(const ChernClass& x, const SlicePoint& p) {
    const Rational& b = p.beta;
    Rational half_diff = (b * b - p.alpha_sq) / Rational(2);
    ProjectiveSlope s;
    s.num = x.ch2 - b * x.deg + half_diff * Rational(x.rank);
    s.den = x.deg - b * Rational(x.rank);
    return s;
}

namespace {

// Validate that x is usable on the heart side at p and return its slope pair.
ProjectiveSlope checked_slope(const ChernClass& x, const SlicePoint& p) {
    ProjectiveSlope s = tilt_slope(x, p);
    if (s.den.sign() < 0) {
        throw std::invalid_argument(
            "compare_tilt: class " + to_string(x) +
            " has negative tilt denominator at beta=" + p.beta.to_string() +
            "; shift it into the heart first");
    }
    if (s.den.is_zero() && s.num.is_zero()) {
        throw std::invalid_argument(
            "compare_tilt: class " + to_string(x) +
            " has vanishing tilt slope pair at beta=" + p.beta.to_string());
    }
    return s;
}

}  // namespace

Ordering compare_tilt(const ChernClass& x, const ChernClass& y, const SlicePoint& p) {
    ProjectiveSlope sx = checked_slope(x, p);
    ProjectiveSlope sy = checked_slope(y, p);
    bool ix = sx.den.is_zero();
    bool iy = sy.den.is_zero();
    if (ix && iy) return Ordering::Equal;
    if (ix) return Ordering::Greater;
    if (iy) return Ordering::Less;
    Rational cross = sx.num * sy.den - sy.num * sx.den;
    int s = cross.sign();
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

bool heart_contains(const ChernClass& x, const Slope& mu_plus, const Slope& mu_minus,
                    const Rational& beta, bool shifted) {
    if (mu_plus < mu_minus) {
        throw std::invalid_argument("heart_contains: mu_plus < mu_minus for class " +
                                    to_string(x));
    }
    Slope b(beta);
    if (shifted) return mu_plus <= b;
    return mu_minus > b;
}

}  // namespace tiltwall
