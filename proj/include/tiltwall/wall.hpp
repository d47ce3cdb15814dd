#pragma once

#include <optional>
#include <string>

#include "tiltwall/chern.hpp"

namespace tiltwall {

enum class WallKind { Semicircle, VerticalLine, Empty, Everything };

/// A numerical wall in the (beta, alpha) upper half-plane.  Semicircles are
/// centered on the beta axis and carry their radius squared (always > 0);
/// vertical lines carry their beta position.  Empty means no solution with
/// alpha > 0; Everything means the two classes impose no condition at all.
struct Wall {
    WallKind kind;
    Rational center;     // Semicircle only
    Rational radius_sq;  // Semicircle only, > 0
    Rational beta;       // VerticalLine only

    static Wall semicircle(const Rational& center, const Rational& radius_sq);
    static Wall vertical_line(const Rational& beta);
    static Wall empty();
    static Wall everything();

    bool operator==(const Wall& o) const;
    bool operator!=(const Wall& o) const { return !(*this == o); }
    std::string to_string() const;
};

/// Coefficients of the wall equation x*alpha^2 + x*beta^2 - 2*y*beta + 2*z = 0
/// cut out by a pair of classes; antisymmetric under swapping the pair.
struct WallCoefficients {
    Rational x;  // deg(e)*rank(f) - deg(f)*rank(e)
    Rational y;  // ch2(e)*rank(f) - ch2(f)*rank(e)
    Rational z;  // ch2(e)*deg(f) - ch2(f)*deg(e)
};

WallCoefficients wall_coefficients(const ChernClass& e, const ChernClass& f);

/// Solve the wall equation: Semicircle(y/x, y^2/x^2 - 2z/x) when x != 0 and
/// the radius squared is positive; Empty when it is <= 0; VerticalLine(z/y)
/// when x = 0, y != 0; Empty when only z is nonzero; Everything when all
/// three coefficients vanish.
Wall classify_wall(const ChernClass& e, const ChernClass& f);

/// Radius squared of the wall of e through center c, computed from the slope
/// and discriminant of e alone: (mu - c)^2 - disc/rank^2.  May be negative
/// (no wall).  Requires rank(e) != 0.
Rational radius_sq_via_discriminant(const ChernClass& e, const Rational& center);

/// The unique vertical wall of a class with nonzero rank: beta = slope(e).
Wall vertical_wall(const ChernClass& e);

/// True iff the two walls have no common point with alpha^2 > 0, i.e. they do
/// not cross inside the upper half-plane.  Coincident walls describe the same
/// wall, not a crossing, and count as disjoint.  Tangencies on the beta axis
/// also count as disjoint.  Rejects Empty and Everything inputs.
bool walls_disjoint(const Wall& w1, const Wall& w2);

/// Upper bounds for the radius of any actual wall of a class with rank > 0
/// and nonnegative discriminant, split by whether a destabilizing subobject
/// has rank above or at most rank(e).  The first bound is reported as a
/// radius *squared* (disc/(4(rank+1))), the second as a radius
/// (|disc - 1/rank^2|/2); both stay rational that way.  An absent value marks
/// the degenerate situations in which no wall of that kind exists at all
/// (disc = 0, and for the second bound also disc = 1 with rank 1).
struct LargestWallBound {
    std::optional<Rational> case1_radius_sq_bound;
    std::optional<Rational> case2_radius_bound;
};

LargestWallBound largest_wall_bound(const ChernClass& e);

}  // namespace tiltwall
