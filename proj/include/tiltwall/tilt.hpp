#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/surface.hpp"

namespace tiltwall {

/// Tilt slope at a slice point, as an unreduced projective pair
/// (numerator, denominator).  A zero denominator means +infinity.  Kept as a
/// pair so that comparisons happen by exact cross multiplication instead of
/// division.
struct ProjectiveSlope {
    Rational num;
    Rational den;
};

/// Numerator: ch2 - beta * deg + (beta^2/2 - alpha^2/2) * rank.
/// Denominator: deg - beta * rank.
ProjectiveSlope tilt_slope(const ChernClass& x, const SlicePoint& p);

/// Compare tilt slopes of x and y at p by cross multiplication.
/// Denominator zero counts as +infinity, and +infinity equals +infinity.
/// Rejects classes whose tilt denominator is negative at p (the class is not
/// presented on the heart side there; the caller must shift it first) and
/// classes with numerator and denominator both zero.
Ordering compare_tilt(const ChernClass& x, const ChernClass& y, const SlicePoint& p);

/// Membership of x (or of its shift by one) in the tilted heart at beta,
/// from caller-supplied extremal slopes of the Harder-Narasimhan filtration:
/// unshifted sheaves lie in the heart iff mu_minus > beta, shifted ones iff
/// mu_plus <= beta.  For a slope-semistable class pass
/// mu_plus = mu_minus = slope(x).
bool heart_contains(const ChernClass& x, const Slope& mu_plus, const Slope& mu_minus,
                    const Rational& beta, bool shifted);

}  // namespace tiltwall
