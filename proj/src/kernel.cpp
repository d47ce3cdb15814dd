#include "tiltwall/kernel.hpp"

#include <stdexcept>

#include "tiltwall/wall.hpp"

namespace tiltwall {

ChernClass kernel_class(const ChernClass& e, const Integer& h0) {
    if (h0 < 0) {
        throw std::invalid_argument("kernel_class: h0 must be nonnegative");
    }
    if (h0 < e.rank) {
        throw std::invalid_argument("kernel_class: h0 must be at least rank(e); got h0=" +
                                    h0.get_str() + ", rank=" + e.rank.get_str());
    }
    ChernClass k;
    k.rank = h0 - e.rank;
    k.deg = -e.deg;
    k.ch2 = -e.ch2;
    return k;
}

Wall destabilizing_wall(const ChernClass& e) {
    if (e.deg.sign() <= 0) {
        throw std::invalid_argument("destabilizing_wall: deg(e) must be positive, got " +
                                    e.deg.to_string());
    }
    if (e.ch2.sign() <= 0) {
        throw std::invalid_argument("destabilizing_wall: ch2(e) must be positive, got " +
                                    e.ch2.to_string());
    }
    Rational c = e.ch2 / e.deg;
    return Wall::semicircle(c, c * c);
}

Rational slope_gap(const ChernClass& e, const Rational& epsilon) {
    if (e.deg.sign() <= 0 || e.ch2.sign() <= 0) {
        throw std::invalid_argument("slope_gap: deg(e) and ch2(e) must be positive");
    }
    if (epsilon.sign() < 0) {
        throw std::invalid_argument("slope_gap: epsilon must be nonnegative");
    }
    Rational deg_sq = e.deg * e.deg;
    Rational core = deg_sq - Rational(e.rank) * e.ch2;
    if (core.sign() <= 0) {
        throw std::invalid_argument("slope_gap: deg^2 - rank*ch2 must be positive, got " +
                                    core.to_string());
    }
    Rational num = deg_sq * epsilon * (Rational(2) * e.ch2 + e.deg * epsilon);
    Rational den = Rational(2) * e.ch2 * core;
    return num / den;
}

KernelReport check_theorem_hypotheses(const Surface& s, const ChernClass& e,
                                      const Integer& h0) {
    if (e.rank < 1) {
        throw std::invalid_argument("check_theorem_hypotheses: rank(e) must be at least 1");
    }
    if (h0 < e.rank) {
        throw std::invalid_argument("check_theorem_hypotheses: h0 must be at least rank(e)");
    }

    KernelReport r;
    r.subject = e;
    r.h0 = h0;
    r.kernel = kernel_class(e, h0);
    r.k_sq = s.k_sq();

    Integer cokernel_rank = h0 - e.rank;
    r.degree_bound.lhs = e.deg;
    r.degree_bound.rhs = r.k_sq * Rational(cokernel_rank);
    r.degree_bound.ok = e.deg.sign() > 0 && e.deg <= r.degree_bound.rhs;

    r.ch2_positive = e.ch2.sign() > 0;

    Rational disc = discriminant(e);
    Integer rank_sq = e.rank * e.rank;
    if (!e.deg.is_zero()) {
        r.discriminant_ratio_defined = true;
        r.discriminant_bound.lhs = Rational(2) * e.ch2 / e.deg + Rational(1) / Rational(rank_sq);
        r.discriminant_bound.rhs = disc;
        r.discriminant_bound.ok = r.discriminant_bound.lhs >= disc;
    } else {
        r.discriminant_ratio_defined = false;
        r.discriminant_bound.lhs = Rational(0);
        r.discriminant_bound.rhs = disc;
        r.discriminant_bound.ok = false;
    }

    if (e.deg.sign() > 0 && e.ch2.sign() > 0) {
        r.destab_wall = destabilizing_wall(e);
        if (disc.sign() >= 0) {
            LargestWallBound b = largest_wall_bound(e);
            Rational rho = e.ch2 / e.deg;
            Rational rho_sq = rho * rho;
            r.wall_domination_defined = true;
            r.wall_domination_case1 =
                !b.case1_radius_sq_bound || *b.case1_radius_sq_bound < rho_sq;
            r.wall_domination_case2 = !b.case2_radius_bound || *b.case2_radius_bound < rho;
        }
    }

    if (!r.degree_bound.ok) r.failed_bullets.push_back("degree_bound");
    if (!r.ch2_positive) r.failed_bullets.push_back("ch2_positive");
    if (!r.discriminant_bound.ok) r.failed_bullets.push_back("discriminant_bound");
    r.all_hypotheses_hold = r.failed_bullets.empty();
    return r;
}

namespace {

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string yes_no(bool ok) { return ok ? "yes" : "no"; }

}  // namespace

std::string render_report(const KernelReport& r) {
    std::string out;
    out += "kernel-sheaf stability criterion check\n";
    out += "  class               : " + to_string(r.subject) + "\n";
    out += "  h0                  : " + r.h0.get_str() + "\n";
    out += "  kernel class        : " + to_string(r.kernel) + "\n";
    out += "  K^2                 : " + r.k_sq.to_string() + "\n";

    out += "  [1] degree bound    : 0 < " + r.degree_bound.lhs.to_string() +
           " <= " + r.degree_bound.rhs.to_string() + " (K^2 * (h0 - rank)) : " +
           pass_fail(r.degree_bound.ok) + "\n";

    out += "  [2] ch2 positive    : " + r.subject.ch2.to_string() +
           (r.ch2_positive ? " > 0" : " <= 0") + " : " + pass_fail(r.ch2_positive) + "\n";

    if (r.discriminant_ratio_defined) {
        out += "  [3] discriminant    : 2*ch2/deg + 1/rank^2 = " +
               r.discriminant_bound.lhs.to_string() +
               (r.discriminant_bound.ok ? " >= " : " < ") +
               r.discriminant_bound.rhs.to_string() + " = discriminant : " +
               pass_fail(r.discriminant_bound.ok) + "\n";
    } else {
        out += "  [3] discriminant    : ratio 2*ch2/deg undefined (deg = 0) : FAIL\n";
    }

    out += "  destabilizing wall  : " + r.destab_wall.to_string() + "\n";
    if (r.wall_domination_defined) {
        out += "  wall domination     : higher-rank bound ok=" +
               yes_no(r.wall_domination_case1) +
               ", lower-rank bound ok=" + yes_no(r.wall_domination_case2) +
               " (informational)\n";
    } else {
        out += "  wall domination     : not applicable\n";
    }
    out += "  note                : categorical hypotheses (global generation, h0 = dim "
           "H^0, semistability of E) are asserted by the caller, not verified\n";

    if (r.all_hypotheses_hold) {
        out += "  verdict             : AllHypothesesHold\n";
    } else {
        out += "  verdict             : Fails(";
        for (std::size_t i = 0; i < r.failed_bullets.size(); ++i) {
            if (i != 0) out += ", ";
            out += r.failed_bullets[i];
        }
        out += ")\n";
    }
    return out;
}

DestabilizerFilter destabilizer_filter(const ChernClass& n, const ChernClass& m) {
    if (n.deg.is_zero() || m.deg.is_zero()) {
        throw std::invalid_argument("destabilizer_filter: degrees must be nonzero");
    }
    if (n.rank < 1 || m.rank < 1) {
        throw std::invalid_argument("destabilizer_filter: ranks must be at least 1");
    }
    DestabilizerFilter f;
    f.ch2_ratio_ok = n.ch2 / n.deg <= m.ch2 / m.deg;
    // chi in anticanonical units: ch2 + deg/2 + rank.
    Rational chi_n = n.ch2 + n.deg / Rational(2) + Rational(n.rank);
    bool contradiction = n.deg.sign() < 0 && chi_n.sign() > 0;
    f.chi_sign_certificate = contradiction ? ChiSignCertificate::ContradictionReached
                                           : ChiSignCertificate::NoContradiction;
    return f;
}

Integer twist_bound(const Surface&, const ChernClass& e, const Rational& reg) {
    if (e.rank < 1) {
        throw std::invalid_argument("twist_bound: rank(e) must be at least 1");
    }
    Rational disc = discriminant(e);
    if (disc.sign() < 0) {
        throw std::invalid_argument("twist_bound: discriminant(e) must be nonnegative, got " +
                                    disc.to_string());
    }
    Rational mu = slope(e).value();
    Integer rank_sq = e.rank * e.rank;
    Rational q = Rational(4) * disc / Rational(rank_sq) + Rational(1);

    // Least d with d + mu - 1/2 >= sqrt(q), decided exactly: the predicate
    // "t >= 0 and t^2 >= q" is monotone in d, so binary search between a
    // certainly-false and a certainly-true integer.
    Rational half(1, 2);
    auto pred = [&](const Integer& d) {
        Rational t = Rational(d) + mu - half;
        return t.sign() >= 0 && t * t >= q;
    };
    Integer lo = (half - mu).floor() - 1;        // t(lo) < 0
    Integer hi = (half - mu).ceil() + sqrt_upper(q).ceil() + 1;  // t(hi) >= sqrt(q)
    while (hi - lo > 1) {
        Integer mid = (hi + lo) / 2;
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Integer d = hi;

    Integer d2 = (disc - mu).ceil();
    if (d2 > d) d = d2;
    Integer d3 = reg.ceil();
    if (d3 > d) d = d3;
    return d;
}

}  // namespace tiltwall
