#include "tiltwall/kernel.hpp"

#include <stdexcept>
#include <string>

#include "tiltwall/surface.hpp"
#include "tiltwall/tilt.hpp"

#include "test_support.hpp"

using tiltwall::ChernClass;
using tiltwall::ChiSignCertificate;
using tiltwall::Integer;
using tiltwall::KernelReport;
using tiltwall::Rational;
using tiltwall::Surface;
using tiltwall::Wall;
using tiltwall::WallKind;

static ChernClass cc(long r, const Rational& d, const Rational& c) {
    return {Integer(r), d, c};
}

static void test_kernel_class() {
    // Evaluation sequences 0 -> M -> O^h0 -> E -> 0 on the plane:
    // tangent twist (h0 = 8) and a line bundle of degree 1 (h0 = 3).
    REQUIRE(tiltwall::kernel_class(cc(2, Rational(3), Rational(3, 2)), Integer(8)) ==
            cc(6, Rational(-3), Rational(-3, 2)));
    REQUIRE(tiltwall::kernel_class(cc(1, Rational(1), Rational(1, 2)), Integer(3)) ==
            cc(2, Rational(-1), Rational(-1, 2)));
    REQUIRE(tiltwall::kernel_class(cc(3, Rational(0), Rational(0)), Integer(3)) ==
            cc(0, Rational(0), Rational(0)));

    // Additivity: kernel + e = (h0, 0, 0), for any rank (negative included).
    for (int i = 0; i < 400; ++i) {
        ChernClass e = {Integer(testing::rand_long(-4, 6)), testing::rand_rational(-8, 8),
                        testing::rand_rational(-8, 8)};
        long lo = e.rank < 0 ? 0 : static_cast<long>(e.rank.get_si());
        Integer h0(testing::rand_long(lo, lo + 5));
        ChernClass m = tiltwall::kernel_class(e, h0);
        ChernClass total = tiltwall::linear_combine(Integer(1), m, Integer(1), e);
        REQUIRE(total == ChernClass({h0, Rational(0), Rational(0)}));
    }

    REQUIRE_THROWS(tiltwall::kernel_class(cc(1, Rational(1), Rational(0)), Integer(-1)),
                   std::invalid_argument);
    REQUIRE_THROWS(tiltwall::kernel_class(cc(3, Rational(1), Rational(0)), Integer(2)),
                   std::invalid_argument);
}

static void test_destabilizing_wall() {
    Wall w = tiltwall::destabilizing_wall(cc(2, Rational(7), Rational(23, 2)));
    REQUIRE(w.kind == WallKind::Semicircle);
    REQUIRE(w.center == Rational(23, 14));
    REQUIRE(w.radius_sq == Rational(529, 196));

    w = tiltwall::destabilizing_wall(cc(2, Rational(3), Rational(3, 2)));
    REQUIRE(w == Wall::semicircle(Rational(1, 2), Rational(1, 4)));

    // Always the wall against the shifted trivial class, touching the origin.
    ChernClass shifted_o = cc(-1, Rational(0), Rational(0));
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        ChernClass e = {Integer(testing::rand_long(-5, 5)), testing::rand_rational(-6, 6),
                        testing::rand_rational(-6, 6)};
        if (e.deg.sign() <= 0 || e.ch2.sign() <= 0) continue;
        Wall d = tiltwall::destabilizing_wall(e);
        REQUIRE(d == tiltwall::classify_wall(e, shifted_o));
        REQUIRE(d.kind == WallKind::Semicircle);
        REQUIRE(d.center == e.ch2 / e.deg);
        REQUIRE(d.radius_sq == d.center * d.center);  // passes through (0, 0)
        ++checked;
    }
    REQUIRE(checked >= 100);

    REQUIRE_THROWS(tiltwall::destabilizing_wall(cc(1, Rational(0), Rational(1))),
                   std::invalid_argument);
    REQUIRE_THROWS(tiltwall::destabilizing_wall(cc(1, Rational(-2), Rational(1))),
                   std::invalid_argument);
    REQUIRE_THROWS(tiltwall::destabilizing_wall(cc(1, Rational(2), Rational(0))),
                   std::invalid_argument);
}

static void test_slope_gap() {
    REQUIRE(tiltwall::slope_gap(cc(2, Rational(7), Rational(23, 2)), Rational(1)) ==
            Rational(735, 299));
    REQUIRE(tiltwall::slope_gap(cc(1, Rational(1), Rational(1, 2)), Rational(1, 2)) ==
            Rational(3, 2));
    REQUIRE(tiltwall::slope_gap(cc(2, Rational(7), Rational(23, 2)), Rational(0)) ==
            Rational(0));

    // Oracle: the gap is literally the difference of the two tilt slopes at
    // (beta, alpha) = (ch2/deg, ch2/deg + eps).
    ChernClass shifted_o = cc(-1, Rational(0), Rational(0));
    int checked = 0;
    for (int i = 0; i < 1200; ++i) {
        ChernClass e = {Integer(testing::rand_long(-4, 4)), testing::rand_rational(1, 8),
                        testing::rand_rational(0, 6)};
        if (e.deg.sign() <= 0 || e.ch2.sign() <= 0) continue;
        Rational core = e.deg * e.deg - Rational(e.rank) * e.ch2;
        if (core.sign() <= 0) continue;
        Rational eps = testing::rand_rational(0, 3);
        Rational beta = e.ch2 / e.deg;
        Rational alpha = beta + eps;
        tiltwall::SlicePoint p(beta, alpha * alpha);
        tiltwall::ProjectiveSlope a = tiltwall::tilt_slope(shifted_o, p);
        tiltwall::ProjectiveSlope b = tiltwall::tilt_slope(e, p);
        REQUIRE(a.den.sign() > 0);
        REQUIRE(b.den.sign() > 0);
        Rational gap = tiltwall::slope_gap(e, eps);
        REQUIRE(gap == a.num / a.den - b.num / b.den);
        if (eps.sign() > 0) {
            REQUIRE(gap.sign() > 0);
        } else {
            REQUIRE(gap.is_zero());
        }
        ++checked;
    }
    REQUIRE(checked >= 400);

    REQUIRE_THROWS(tiltwall::slope_gap(cc(1, Rational(0), Rational(1)), Rational(1)),
                   std::invalid_argument);
    REQUIRE_THROWS(tiltwall::slope_gap(cc(1, Rational(1), Rational(-1)), Rational(1)),
                   std::invalid_argument);
    REQUIRE_THROWS(tiltwall::slope_gap(cc(1, Rational(1), Rational(1, 2)), Rational(-1)),
                   std::invalid_argument);
    // deg^2 - rank*ch2 = 9 - 10 < 0
    REQUIRE_THROWS(tiltwall::slope_gap(cc(2, Rational(3), Rational(5)), Rational(1)),
                   std::invalid_argument);
}

static void test_report_tangent_counterexample() {
    Surface p2 = tiltwall::make_surface("del-pezzo:9");
    KernelReport r =
        tiltwall::check_theorem_hypotheses(p2, cc(2, Rational(3), Rational(3, 2)), Integer(8));
    REQUIRE(r.kernel == cc(6, Rational(-3), Rational(-3, 2)));
    REQUIRE(r.k_sq == Rational(9));
    REQUIRE(r.degree_bound.ok);
    REQUIRE(r.degree_bound.lhs == Rational(3));
    REQUIRE(r.degree_bound.rhs == Rational(54));
    REQUIRE(r.ch2_positive);
    REQUIRE(r.discriminant_ratio_defined);
    REQUIRE(!r.discriminant_bound.ok);
    REQUIRE(r.discriminant_bound.lhs == Rational(5, 4));
    REQUIRE(r.discriminant_bound.rhs == Rational(3));
    REQUIRE(r.destab_wall == Wall::semicircle(Rational(1, 2), Rational(1, 4)));
    REQUIRE(r.wall_domination_defined);
    REQUIRE(!r.wall_domination_case1);  // 3/12 = 1/4, not < (1/2)^2
    REQUIRE(!r.wall_domination_case2);  // 11/8, not < 1/2
    REQUIRE(!r.all_hypotheses_hold);
    REQUIRE(r.failed_bullets.size() == 1);
    REQUIRE(r.failed_bullets[0] == "discriminant_bound");

    std::string text = tiltwall::render_report(r);
    REQUIRE(text.find("  class               : 2,3,3/2\n") != std::string::npos);
    REQUIRE(text.find("  kernel class        : 6,-3,-3/2\n") != std::string::npos);
    REQUIRE(text.find("0 < 3 <= 54 (K^2 * (h0 - rank)) : PASS") != std::string::npos);
    REQUIRE(text.find("3/2 > 0 : PASS") != std::string::npos);
    REQUIRE(text.find("5/4 < 3 = discriminant : FAIL") != std::string::npos);
    REQUIRE(text.find("higher-rank bound ok=no, lower-rank bound ok=no") != std::string::npos);
    REQUIRE(text.find("verdict             : Fails(discriminant_bound)") != std::string::npos);
}

static void test_report_passing_class() {
    Surface dp1 = tiltwall::make_surface("del-pezzo:1");
    KernelReport r = tiltwall::check_theorem_hypotheses(
        dp1, cc(2, Rational(7), Rational(23, 2)), Integer(24));
    REQUIRE(r.all_hypotheses_hold);
    REQUIRE(r.failed_bullets.empty());
    REQUIRE(r.degree_bound.lhs == Rational(7));
    REQUIRE(r.degree_bound.rhs == Rational(22));
    REQUIRE(r.discriminant_bound.lhs == Rational(99, 28));
    REQUIRE(r.discriminant_bound.rhs == Rational(3));
    REQUIRE(r.destab_wall == Wall::semicircle(Rational(23, 14), Rational(529, 196)));
    REQUIRE(r.wall_domination_defined);
    REQUIRE(r.wall_domination_case1);
    REQUIRE(r.wall_domination_case2);

    std::string text = tiltwall::render_report(r);
    REQUIRE(text.find("99/28 >= 3 = discriminant : PASS") != std::string::npos);
    REQUIRE(text.find("0 < 7 <= 22 (K^2 * (h0 - rank)) : PASS") != std::string::npos);
    REQUIRE(text.find("higher-rank bound ok=yes, lower-rank bound ok=yes") != std::string::npos);
    REQUIRE(text.find("verdict             : AllHypothesesHold") != std::string::npos);

    // Degree-bound equality case: deg = K^2*(h0 - rank) exactly, still PASS.
    r = tiltwall::check_theorem_hypotheses(dp1, cc(1, Rational(1), Rational(1, 2)), Integer(2));
    REQUIRE(r.all_hypotheses_hold);
    REQUIRE(r.degree_bound.lhs == Rational(1));
    REQUIRE(r.degree_bound.rhs == Rational(1));
    REQUIRE(r.discriminant_bound.lhs == Rational(2));
    REQUIRE(r.discriminant_bound.rhs == Rational(0));
    REQUIRE(r.kernel == cc(1, Rational(-1), Rational(-1, 2)));
    // Zero discriminant: both largest-wall bounds are absent, so domination
    // holds vacuously.
    REQUIRE(r.wall_domination_defined);
    REQUIRE(r.wall_domination_case1);
    REQUIRE(r.wall_domination_case2);
}

static void test_report_degenerate_classes() {
    Surface dp1 = tiltwall::make_surface("del-pezzo:1");

    // deg = 0: bullet 1 fails (not strictly positive) and the bullet-3 ratio
    // is undefined; no destabilizing wall is drawn.
    KernelReport r =
        tiltwall::check_theorem_hypotheses(dp1, cc(1, Rational(0), Rational(5)), Integer(1));
    REQUIRE(!r.degree_bound.ok);
    REQUIRE(!r.discriminant_ratio_defined);
    REQUIRE(!r.discriminant_bound.ok);
    REQUIRE(r.destab_wall.kind == WallKind::Empty);
    REQUIRE(!r.wall_domination_defined);
    REQUIRE(!r.all_hypotheses_hold);
    REQUIRE(r.failed_bullets.size() == 2);
    REQUIRE(r.failed_bullets[0] == "degree_bound");
    REQUIRE(r.failed_bullets[1] == "discriminant_bound");
    std::string text = tiltwall::render_report(r);
    REQUIRE(text.find("ratio 2*ch2/deg undefined (deg = 0) : FAIL") != std::string::npos);
    REQUIRE(text.find("wall domination     : not applicable") != std::string::npos);
    REQUIRE(text.find("verdict             : Fails(degree_bound, discriminant_bound)") !=
            std::string::npos);

    // ch2 <= 0: bullet 2 fails.
    r = tiltwall::check_theorem_hypotheses(dp1, cc(1, Rational(2), Rational(-1)), Integer(3));
    REQUIRE(!r.ch2_positive);
    REQUIRE(!r.all_hypotheses_hold);
    text = tiltwall::render_report(r);
    REQUIRE(text.find("-1 <= 0 : FAIL") != std::string::npos);
    REQUIRE(text.find("wall domination     : not applicable") != std::string::npos);

    REQUIRE_THROWS(tiltwall::check_theorem_hypotheses(dp1, cc(0, Rational(1), Rational(1)),
                                                      Integer(1)),
                   std::invalid_argument);
    REQUIRE_THROWS(tiltwall::check_theorem_hypotheses(dp1, cc(3, Rational(1), Rational(1)),
                                                      Integer(2)),
                   std::invalid_argument);
}

static void test_euler_characteristic_additivity() {
    // chi(kernel) = h0 * chi(O) - chi(e), by linearity of chi.
    for (const char* name : {"del-pezzo:1", "del-pezzo:5", "del-pezzo:9"}) {
        Surface s = tiltwall::make_surface(name);
        for (int i = 0; i < 100; ++i) {
            ChernClass e = testing::rand_lattice_class();
            long lo = e.rank < 0 ? 0 : static_cast<long>(e.rank.get_si());
            Integer h0(testing::rand_long(lo, lo + 4));
            ChernClass m = tiltwall::kernel_class(e, h0);
            ChernClass trivial = {h0, Rational(0), Rational(0)};
            REQUIRE(tiltwall::euler_characteristic(s, m) + tiltwall::euler_characteristic(s, e) ==
                    tiltwall::euler_characteristic(s, trivial));
        }
    }
}

static void test_destabilizer_filter() {
    using tiltwall::destabilizer_filter;

    // Equal ch2/deg ratios on both sides (rank-2 subobject of the rank-6
    // kernel): the non-strict comparison holds.
    tiltwall::DestabilizerFilter f =
        destabilizer_filter(cc(2, Rational(-1), Rational(-1, 2)),
                            cc(6, Rational(-3), Rational(-3, 2)));
    REQUIRE(f.ch2_ratio_ok);
    // chi(n) = -1/2 - 1/2 + 2 = 1 > 0 with deg < 0: the sign chain closes.
    REQUIRE(f.chi_sign_certificate == ChiSignCertificate::ContradictionReached);

    // n = m trivially passes the ratio test.
    ChernClass m = cc(2, Rational(-1), Rational(-1, 2));
    f = destabilizer_filter(m, m);
    REQUIRE(f.ch2_ratio_ok);

    // ch2/deg = 1 > 1/2: candidate excluded.
    f = destabilizer_filter(cc(1, Rational(-1), Rational(-1)), m);
    REQUIRE(!f.ch2_ratio_ok);
    // chi(n) = -1 - 1/2 + 1 < 0: no contradiction from the sign chain.
    REQUIRE(f.chi_sign_certificate == ChiSignCertificate::NoContradiction);

    // Positive degree never yields the contradiction (it needs deg < 0).
    f = destabilizer_filter(cc(1, Rational(2), Rational(5)), m);
    REQUIRE(f.chi_sign_certificate == ChiSignCertificate::NoContradiction);

    // chi(n) = 0 - 1/2 + 1 = 1/2 > 0 and deg < 0: contradiction.
    f = destabilizer_filter(cc(1, Rational(-1), Rational(0)), m);
    REQUIRE(f.ch2_ratio_ok);  // 0 <= 1/2
    REQUIRE(f.chi_sign_certificate == ChiSignCertificate::ContradictionReached);

    REQUIRE_THROWS(destabilizer_filter(cc(1, Rational(0), Rational(1)), m),
                   std::invalid_argument);
    REQUIRE_THROWS(destabilizer_filter(m, cc(1, Rational(0), Rational(1))),
                   std::invalid_argument);
    REQUIRE_THROWS(destabilizer_filter(cc(0, Rational(1), Rational(1)), m),
                   std::invalid_argument);
    REQUIRE_THROWS(destabilizer_filter(m, cc(-1, Rational(1), Rational(1))),
                   std::invalid_argument);
}

// The three lower bounds, re-evaluated with the exact sqrt comparator instead
// of the library's internal binary search.
static bool clears_all_bounds(const ChernClass& e, const Rational& reg, const Integer& d) {
    Rational disc = tiltwall::discriminant(e);
    Rational mu = tiltwall::slope(e).value();
    Integer rank_sq = e.rank * e.rank;
    Rational q = Rational(4) * disc / Rational(rank_sq) + Rational(1);
    Rational t = Rational(d) + mu - Rational(1, 2);
    if (tiltwall::cmp_with_sqrt(t, q) < 0) return false;
    if (Rational(d) < disc - mu) return false;
    return Rational(d) >= reg;
}

static void test_twist_bound() {
    Surface dp1 = tiltwall::make_surface("del-pezzo:1");
    Surface other = tiltwall::make_surface(Integer(2), Rational(5, 2), Integer(1));

    ChernClass o = cc(1, Rational(0), Rational(0));
    REQUIRE(tiltwall::twist_bound(dp1, o, Rational(0)) == 2);
    REQUIRE(tiltwall::twist_bound(dp1, o, Rational(7, 2)) == 4);  // ceil(reg) wins
    REQUIRE(tiltwall::twist_bound(dp1, cc(2, Rational(3), Rational(3, 2)), Rational(-1)) == 2);

    // Minimality: the returned d clears all three bounds and d - 1 does not.
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        long rank = testing::rand_long(1, 5);
        long deg = testing::rand_long(-8, 8);
        long two_ch2 = testing::rand_long(-10, (deg * deg) / rank);
        ChernClass e = cc(rank, Rational(deg), Rational(two_ch2, 2));
        if (tiltwall::discriminant(e).sign() < 0) continue;
        Rational reg = testing::rand_rational(-5, 5);
        Integer d = tiltwall::twist_bound(dp1, e, reg);
        REQUIRE(clears_all_bounds(e, reg, d));
        Integer prev = d - 1;
        REQUIRE(!clears_all_bounds(e, reg, prev));
        REQUIRE(tiltwall::twist_bound(other, e, reg) == d);  // surface-independent
        ++checked;
    }
    REQUIRE(checked >= 300);

    REQUIRE_THROWS(tiltwall::twist_bound(dp1, cc(0, Rational(1), Rational(0)), Rational(0)),
                   std::invalid_argument);
    REQUIRE_THROWS(tiltwall::twist_bound(dp1, cc(2, Rational(0), Rational(1)), Rational(0)),
                   std::invalid_argument);  // discriminant -4
}

int main() {
    test_kernel_class();
    test_destabilizing_wall();
    test_slope_gap();
    test_report_tangent_counterexample();
    test_report_passing_class();
    test_report_degenerate_classes();
    test_euler_characteristic_additivity();
    test_destabilizer_filter();
    test_twist_bound();
    std::puts("test_kernel: all checks passed");
    return 0;
}
