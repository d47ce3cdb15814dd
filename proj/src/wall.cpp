#include "tiltwall/wall.hpp"

#include <stdexcept>

namespace tiltwall {

Wall Wall::semicircle(const Rational& center, const Rational& radius_sq) {
    if (radius_sq.sign() <= 0) {
        throw std::invalid_argument("wall: semicircle radius_sq must be positive, got " +
                                    radius_sq.to_string());
    }
    Wall w;
    w.kind = WallKind::Semicircle;
    w.center = center;
    w.radius_sq = radius_sq;
    w.beta = Rational(0);
    return w;
}

Wall Wall::vertical_line(const Rational& beta) {
    Wall w;
    w.kind = WallKind::VerticalLine;
    w.center = Rational(0);
    w.radius_sq = Rational(0);
    w.beta = beta;
    return w;
}

Wall Wall::empty() {
    Wall w;
    w.kind = WallKind::Empty;
    w.center = Rational(0);
    w.radius_sq = Rational(0);
    w.beta = Rational(0);
    return w;
}

Wall Wall::everything() {
    Wall w;
    w.kind = WallKind::Everything;
    w.center = Rational(0);
    w.radius_sq = Rational(0);
    w.beta = Rational(0);
    return w;
}

bool Wall::operator==(const Wall& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case WallKind::Semicircle:
            return center == o.center && radius_sq == o.radius_sq;
        case WallKind::VerticalLine:
            return beta == o.beta;
        default:
            return true;
    }
}

std::string Wall::to_string() const {
    switch (kind) {
        case WallKind::Semicircle:
            return "Semicircle(center=" + center.to_string() +
                   ", radius_sq=" + radius_sq.to_string() + ")";
        case WallKind::VerticalLine:
            return "VerticalLine(beta=" + beta.to_string() + ")";
        case WallKind::Empty:
            return "Empty";
        case WallKind::Everything:
            return "Everything";
    }
    return "Wall(?)";
}

WallCoefficients wall_coefficients(const ChernClass& e, const ChernClass& f) {
    WallCoefficients c;
    c.x = e.deg * Rational(f.rank) - f.deg * Rational(e.rank);
    c.y = e.ch2 * Rational(f.rank) - f.ch2 * Rational(e.rank);
    c.z = e.ch2 * f.deg - f.ch2 * e.deg;
    return c;
}

Wall classify_wall(const ChernClass& e, const ChernClass& f) {
    WallCoefficients c = wall_coefficients(e, f);
    if (!c.x.is_zero()) {
        Rational center = c.y / c.x;
        Rational radius_sq = center * center - Rational(2) * c.z / c.x;
        if (radius_sq.sign() <= 0) return Wall::empty();
        return Wall::semicircle(center, radius_sq);
    }
    if (!c.y.is_zero()) return Wall::vertical_line(c.z / c.y);
    if (!c.z.is_zero()) return Wall::empty();
    return Wall::everything();
}

Rational radius_sq_via_discriminant(const ChernClass& e, const Rational& center) {
    if (e.rank == 0) {
        throw std::invalid_argument(
            "radius_sq_via_discriminant: rank-zero class has no circle data");
    }
    Rational diff = slope(e).value() - center;
    Integer rank_sq = e.rank * e.rank;
    return diff * diff - discriminant(e) / Rational(rank_sq);
}

Wall vertical_wall(const ChernClass& e) {
    if (e.rank == 0) {
        throw std::invalid_argument("vertical_wall: rank-zero class has no vertical wall");
    }
    return Wall::vertical_line(slope(e).value());
}

namespace {

void require_geometric(const Wall& w, const char* who) {
    if (w.kind == WallKind::Empty || w.kind == WallKind::Everything) {
        throw std::invalid_argument(std::string(who) +
                                    ": Empty/Everything walls have no disjointness test");
    }
}

// Two circles centered on the beta axis cross off-axis iff the center gap
// lies strictly between |r1 - r2| and r1 + r2; squared to stay rational:
// (gap^2 - r1^2 - r2^2)^2 < 4 r1^2 r2^2.
bool circles_cross(const Rational& c1, const Rational& r1_sq, const Rational& c2,
                   const Rational& r2_sq) {
    Rational gap = c1 - c2;
    Rational lhs = gap * gap - r1_sq - r2_sq;
    return lhs * lhs < Rational(4) * r1_sq * r2_sq;
}

}  // namespace

bool walls_disjoint(const Wall& w1, const Wall& w2) {
    require_geometric(w1, "walls_disjoint");
    require_geometric(w2, "walls_disjoint");
    if (w1.kind == WallKind::Semicircle && w2.kind == WallKind::Semicircle) {
        return !circles_cross(w1.center, w1.radius_sq, w2.center, w2.radius_sq);
    }
    if (w1.kind == WallKind::VerticalLine && w2.kind == WallKind::VerticalLine) {
        // Distinct lines never meet; equal lines are one wall, not a crossing.
        return true;
    }
    const Wall& circle = (w1.kind == WallKind::Semicircle) ? w1 : w2;
    const Wall& line = (w1.kind == WallKind::Semicircle) ? w2 : w1;
    Rational gap = line.beta - circle.center;
    return gap * gap >= circle.radius_sq;
}

LargestWallBound largest_wall_bound(const ChernClass& e) {
    if (e.rank <= 0) {
        throw std::invalid_argument("largest_wall_bound: rank must be positive");
    }
    Rational disc = discriminant(e);
    if (disc.sign() < 0) {
        throw std::invalid_argument("largest_wall_bound: discriminant must be nonnegative");
    }
    LargestWallBound b;
    if (disc.sign() > 0) {
        Integer four_rank_plus = 4 * (e.rank + 1);
        b.case1_radius_sq_bound = disc / Rational(four_rank_plus);
        if (!(disc == Rational(1) && e.rank == 1)) {
            Integer rank_sq = e.rank * e.rank;
            Rational inv_r_sq = Rational(1) / Rational(rank_sq);
            b.case2_radius_bound = (disc - inv_r_sq).abs() / Rational(2);
        }
    }
    return b;
}

}  // namespace tiltwall
