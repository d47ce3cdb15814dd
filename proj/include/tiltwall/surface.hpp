#pragma once

#include "tiltwall/rational.hpp"

#include <string>

namespace tiltwall {

/// Numerical data of a polarized surface (X, H): the self-intersection H^2,
/// the proportionality factor lambda in  -K_X . H = lambda * H^2  used by the
/// Riemann-Roch formula, and chi(O_X).
struct Surface {
    Integer h_sq;    // H^2 > 0
    Rational lambda; // > 0
    Integer chi_o;

    /// K_X^2 in these units: lambda^2 * H^2.
    Rational k_sq() const { return Rational(h_sq) * lambda * lambda; }
};

/// Preset "del-pezzo:<d>" with 1 <= d <= 9: anticanonically polarized,
/// H^2 = d, lambda = 1, chi(O) = 1.
Surface make_surface(const std::string& preset);

/// Custom surface; rejects h_sq <= 0 and lambda <= 0.
Surface make_surface(const Integer& h_sq, const Rational& lambda, const Integer& chi_o);

/// True iff (beta, alpha_sq) lies in the open upper half plane of the slice,
/// i.e. alpha_sq > 0.  Boundary points are not slice points.
bool interior_slice_point(const Rational& beta, const Rational& alpha_sq);

/// A point of the H-slice, stored as (beta, alpha^2) so that every predicate
/// downstream stays inside exact rational arithmetic.  Construction rejects
/// boundary points alpha_sq <= 0.
struct SlicePoint {
    Rational beta;
    Rational alpha_sq;

    SlicePoint(const Rational& b, const Rational& a_sq);
};

}  // namespace tiltwall
