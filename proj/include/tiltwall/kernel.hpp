#pragma once

#include <string>
#include <vector>

#include "tiltwall/chern.hpp"
#include "tiltwall/surface.hpp"
#include "tiltwall/wall.hpp"

namespace tiltwall {

/// Class of the kernel of a surjection O^h0 -> E with E of rank <= h0:
/// (h0 - rank, -deg, -ch2).  Satisfies kernel + e = (h0, 0, 0).
ChernClass kernel_class(const ChernClass& e, const Integer& h0);

/// Wall of e against the shifted trivial class (-1,0,0):
/// Semicircle(ch2/deg, (ch2/deg)^2), independent of how many trivial summands
/// the surjection uses.  Its axis endpoints are (0,0) and (2*ch2/deg, 0).
/// Requires deg(e) > 0 and ch2(e) > 0.
Wall destabilizing_wall(const ChernClass& e);

/// How far the tilt slope of the shifted trivial class exceeds that of e when
/// measured at beta = ch2/deg, alpha = beta + epsilon (just above the wall):
///     deg^2 * eps * (2*ch2 + deg*eps) / (2*ch2*(deg^2 - rank*ch2)).
/// Zero at eps = 0 (on the wall), positive for eps > 0.  Requires deg > 0,
/// ch2 > 0, deg^2 - rank*ch2 > 0 and epsilon >= 0.
Rational slope_gap(const ChernClass& e, const Rational& epsilon);

/// One evaluated inequality with both exact sides retained for reporting.
struct BoundCheck {
    bool ok = false;
    Rational lhs;
    Rational rhs;
};

/// Result of the numerical stability-criterion check for a kernel sheaf.
/// The three bullet booleans drive the verdict; the wall-domination pair is
/// informational (it follows from a strict version of the third bullet).
struct KernelReport {
    ChernClass subject;
    Integer h0;
    ChernClass kernel;
    Rational k_sq;

    BoundCheck degree_bound;        // 0 < deg <= k_sq * (h0 - rank)
    bool ch2_positive = false;
    BoundCheck discriminant_bound;  // 2*ch2/deg + 1/rank^2 >= discriminant
    bool discriminant_ratio_defined = false;  // false iff deg = 0

    Wall destab_wall = Wall::empty();
    bool wall_domination_defined = false;
    bool wall_domination_case1 = false;  // higher-rank wall bound < ch2/deg
    bool wall_domination_case2 = false;  // lower-rank wall bound < ch2/deg

    bool all_hypotheses_hold = false;
    std::vector<std::string> failed_bullets;
};

/// Evaluate the three numerical hypotheses of the kernel-sheaf stability
/// criterion for e with h0 global sections on surface s, exactly.
/// Requires rank(e) >= 1 and h0 >= rank(e).
KernelReport check_theorem_hypotheses(const Surface& s, const ChernClass& e, const Integer& h0);

/// Multi-line human-readable rendering; every inequality printed with exact
/// rational values on both sides.
std::string render_report(const KernelReport& r);

enum class ChiSignCertificate { ContradictionReached, NoContradiction };

/// Numerical screen for a candidate destabilizing subsheaf class n of a
/// kernel-sheaf class m.  ch2_ratio_ok: ch2(n)/deg(n) <= ch2(m)/deg(m),
/// compared literally on the rational values (kernel-side degrees are
/// negative).  chi_sign_certificate: ContradictionReached iff, granting
/// h^0(n) = h^2(n) = 0, the sign chain chi(n)/deg(n) < 0 <= -h^1(n)/deg(n)
/// closes, i.e. deg(n) < 0 and chi(n) > 0.  Degrees and chi are taken in
/// anticanonical units (lambda = 1, chi(O) = 1), the normalization in which
/// kernel classes arise here.  Requires nonzero degrees and ranks >= 1.
struct DestabilizerFilter {
    bool ch2_ratio_ok = false;
    ChiSignCertificate chi_sign_certificate = ChiSignCertificate::NoContradiction;
};

DestabilizerFilter destabilizer_filter(const ChernClass& n, const ChernClass& m);

/// Least integer d that clears all three twist lower bounds
///     sqrt(4*disc/rank^2 + 1) - slope + 1/2,   disc - slope,   reg,
/// with the square-root comparison decided exactly by sign analysis and
/// squaring.  reg is caller-supplied regularity data.  Requires rank >= 1 and
/// disc >= 0.  The bounds depend only on the class, not on the surface; the
/// surface parameter is kept for signature symmetry with the other checks.
Integer twist_bound(const Surface& s, const ChernClass& e, const Rational& reg);

}  // namespace tiltwall
