#include "tiltwall/enumerate.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <utility>

namespace tiltwall {

std::pair<Integer, Integer> default_rank_range(const Surface& s, const ChernClass& e) {
    Integer b = abs(e.rank);
    b += euler_characteristic(s, e).abs().ceil();
    b += 2;
    return {Integer(-b), b};
}

namespace {

// Filters (i)-(iii) from the header, all exact.  Fills wall/tags on success.
bool passes_filters(const ChernClass& e, const ChernClass& f, const Rational& min_radius_sq,
                    Wall& wall_out, std::vector<std::string>& tags_out) {
    if (f.is_zero() || !is_lattice_class(f)) return false;
    Wall w = classify_wall(e, f);
    if (w.kind != WallKind::Semicircle) return false;
    if (w.radius_sq < min_radius_sq) return false;
    if (discriminant(f).sign() < 0) return false;
    if (discriminant(e - f).sign() < 0) return false;
    Rational tf = f.deg - w.center * Rational(f.rank);
    Rational te = e.deg - w.center * Rational(e.rank);
    if (tf.sign() < 0 || tf > te) return false;
    wall_out = w;
    tags_out.clear();
    if (f.rank > e.rank) {
        tags_out.push_back("case1");
    } else if (f.rank > 0) {
        tags_out.push_back("case2");
    }
    return true;
}

// Box completeness.  Write e = (r, d, c), disc = d^2 - 2cr >= 0, and let
// f = (r', d', c') pass filters (i)-(iii) with wall center C and radius
// squared P > 0.  Any class g in the plane spanned by e and f cuts the same
// wall against e, and equating the two radius formulas gives the identity
//     disc(g) = t_g^2 - P * rank(g)^2,     t_g = deg(g) - C * rank(g)     (*)
// (trivially true when rank(g) = 0, since then disc(g) = deg(g)^2).  Apply
// (*) to e, f and e - f, and write t = t_f, s = t_e, a = r', b = r - r'.
// The sandwich (iii) says 0 <= t <= s, and (ii) says
//   A := disc(f) = t^2 - P a^2 >= 0,  B := disc(e-f) = (s-t)^2 - P b^2 >= 0,
// while (*) for e itself gives s^2 = disc + P r^2.
//
// Radius cap.  Let q = lcm(den(d), den(2c)).  Emitted candidates have
// integer d' and half-integer c' (hard lattice filter), so A is an integer
// and B, S := disc - A - B have denominators dividing q^2.
//  - |a| > |r|:  t <= s and (*) give P (a^2 - r^2) <= disc - A <= disc.
//  - a = 0:  t = d' >= 1, u := s - t >= sqrt(P)|r|, and expanding
//    s^2 = (d' + u)^2 = disc + P r^2 gives d'^2 < disc and
//    sqrt(P) <= u/|r| <= (disc - d'^2) / (2 d' |r|) <= disc * q / 2.
//  - a = r (b = 0):  s - t = d - d' must be nonzero (else the wall
//    coefficient x vanishes), so s - t >= 1/q, and since t + s >= 2 sqrt(P)|r|
//    and (s - t)(s + t) = disc - A:  sqrt(P) <= disc * q / 2.
//  - a b < 0 with |a| < |r|:  s = t + (s - t) >= sqrt(P)(|a| + |b|) and
//    |a| + |b| > |r|, so P ((|a|+|b|)^2 - r^2) <= disc.
//  - a b > 0:  multiplying t^2 = A + P a^2 by (s-t)^2 = B + P b^2 and using
//    2 t (s-t) = S + 2 P a b yields 4 P (A b^2 + B a^2 - a b S) = S^2 - 4 A B.
//    Here S >= 0 (t (s-t) >= P a b), hence A + B <= disc.  If the bracket
//    vanished, the same algebra forces f proportional to e (no semicircle),
//    so it is a nonzero rational with denominator dividing q^2, giving
//    P <= max(S^2, 4 A B) * q^2 / 4 <= disc^2 q^2 / 4.
// In every case P <= P_CAP := max(1, disc)^2 * q^2.
//
// Scan box.  From (*) for e, s^2 = disc + P r^2 <= r^2 U^2 with
// U := sqrt_upper(P_CAP + disc / r^2), and |C - mu| = sqrt(P + disc/r^2) <= U.
// Hence for r' != 0:
//     |d'| = |C r' + t| <= |r'| (|mu| + U) + |r| U,
// and A = d'^2 - 2 c' r' lies in [0, r^2 U^2], which brackets c' between
// (d'^2 - A_CAP) / (2 r') and d'^2 / (2 r').  For r' = 0:
// 0 < d' <= sqrt(disc), and C = c'/d' brackets c' in [d'(mu - U), d'(mu + U)].
struct ScanContext {
    ChernClass e;
    Rational mu;
    Rational disc_e;
    Rational u;
    Rational a_cap;
    Rational deg_step;
    Rational ch2_step;
    Rational min_radius_sq;
};

void try_candidate(const ScanContext& c, const ChernClass& f, std::vector<CandidateWall>& out) {
    Wall w = Wall::empty();
    std::vector<std::string> tags;
    if (passes_filters(c.e, f, c.min_radius_sq, w, tags)) {
        out.push_back(CandidateWall{f, w, std::move(tags)});
    }
}

void scan_rank(const ScanContext& c, const Integer& rp, std::vector<CandidateWall>& out) {
    const Rational& sd = c.deg_step;
    const Rational& sc = c.ch2_step;
    if (rp == 0) {
        Integer k_hi = (sqrt_upper(c.disc_e) / sd).floor();
        for (Integer k = 1; k <= k_hi; ++k) {
            Rational dp = Rational(k) * sd;
            if (dp * dp > c.disc_e) break;
            Integer m_lo = ((dp * (c.mu - c.u)) / sc).ceil();
            Integer m_hi = ((dp * (c.mu + c.u)) / sc).floor();
            for (Integer m = m_lo; m <= m_hi; ++m) {
                try_candidate(c, ChernClass{rp, dp, Rational(m) * sc}, out);
            }
        }
        return;
    }
    Integer abs_rp = abs(rp);
    Integer abs_re = abs(c.e.rank);
    Rational dbox = Rational(abs_rp) * (c.mu.abs() + c.u) + Rational(abs_re) * c.u;
    Integer k_lo = ((-dbox) / sd).ceil();
    Integer k_hi = (dbox / sd).floor();
    Integer two_rp = 2 * rp;
    for (Integer k = k_lo; k <= k_hi; ++k) {
        Rational dp = Rational(k) * sd;
        Rational w1 = (dp * dp - c.a_cap) / Rational(two_rp);
        Rational w2 = (dp * dp) / Rational(two_rp);
        if (w2 < w1) std::swap(w1, w2);
        Integer m_lo = (w1 / sc).ceil();
        Integer m_hi = (w2 / sc).floor();
        for (Integer m = m_lo; m <= m_hi; ++m) {
            try_candidate(c, ChernClass{rp, dp, Rational(m) * sc}, out);
        }
    }
}

// radius_sq descending, then (rank, deg, ch2) ascending: a strict total
// order on candidates, so the output never depends on the thread schedule.
bool candidate_order(const CandidateWall& a, const CandidateWall& b) {
    if (a.wall.radius_sq != b.wall.radius_sq) return b.wall.radius_sq < a.wall.radius_sq;
    if (a.destabilizer.rank != b.destabilizer.rank) return a.destabilizer.rank < b.destabilizer.rank;
    if (a.destabilizer.deg != b.destabilizer.deg) return a.destabilizer.deg < b.destabilizer.deg;
    return a.destabilizer.ch2 < b.destabilizer.ch2;
}

}  // namespace

std::vector<CandidateWall> enumerate_candidate_walls(const ChernClass& e,
                                                     const EnumerationConfig& config) {
    if (e.rank == 0) {
        throw std::invalid_argument("enumerate_candidate_walls: rank(e) must be nonzero");
    }
    Rational disc_e = discriminant(e);
    if (disc_e.sign() < 0) {
        throw std::invalid_argument(
            "enumerate_candidate_walls: discriminant(e) must be nonnegative, got " +
            disc_e.to_string());
    }
    if (config.rank_min > config.rank_max) {
        throw std::invalid_argument("enumerate_candidate_walls: empty rank range");
    }
    if (config.rank_step <= 0) {
        throw std::invalid_argument("enumerate_candidate_walls: rank_step must be positive");
    }
    if (config.deg_step.sign() <= 0 || config.ch2_step.sign() <= 0) {
        throw std::invalid_argument("enumerate_candidate_walls: lattice steps must be positive");
    }

    std::vector<Integer> ranks;
    for (Integer r = config.rank_min; r <= config.rank_max; r += config.rank_step) {
        ranks.push_back(r);
    }

    Integer dden = e.deg.den();
    Integer cden = (Rational(2) * e.ch2).den();
    Integer q;
    mpz_lcm(q.get_mpz_t(), dden.get_mpz_t(), cden.get_mpz_t());
    Rational qq = Rational(q);
    Rational big = disc_e > Rational(1) ? disc_e : Rational(1);
    Rational p_cap = big * big * qq * qq;
    Integer rank_sq = e.rank * e.rank;
    Rational u = sqrt_upper(p_cap + disc_e / Rational(rank_sq));
    Rational a_cap = Rational(rank_sq) * u * u;

    ScanContext base{e,
                     slope(e).value(),
                     disc_e,
                     u,
                     a_cap,
                     config.deg_step,
                     config.ch2_step,
                     config.min_radius_sq};

    unsigned threads = config.threads == 0 ? 1 : config.threads;
    if (ranks.size() < threads) threads = static_cast<unsigned>(ranks.size());

    std::vector<std::vector<CandidateWall>> buckets(ranks.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            scan_rank(base, ranks[i], buckets[i]);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&base, &ranks, &buckets, t, threads]() {
                ScanContext local = base;  // own copies: no shared GMP values
                for (std::size_t i = t; i < ranks.size(); i += threads) {
                    Integer rp = ranks[i];
                    scan_rank(local, rp, buckets[i]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<CandidateWall> all;
    for (auto& bucket : buckets) {
        for (auto& cand : bucket) all.push_back(std::move(cand));
    }
    std::sort(all.begin(), all.end(), candidate_order);
    return all;
}

std::string candidates_to_csv(const std::vector<CandidateWall>& candidates) {
    std::string out = "rank,deg,ch2,center,radius_sq,filters\n";
    for (const auto& c : candidates) {
        out += to_string(c.destabilizer);
        out += ',';
        out += c.wall.center.to_string();
        out += ',';
        out += c.wall.radius_sq.to_string();
        out += ',';
        for (std::size_t i = 0; i < c.filters_passed.size(); ++i) {
            if (i != 0) out += ';';
            out += c.filters_passed[i];
        }
        out += '\n';
    }
    return out;
}

}  // namespace tiltwall
