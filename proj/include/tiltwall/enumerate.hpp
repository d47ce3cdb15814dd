#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tiltwall/chern.hpp"
#include "tiltwall/surface.hpp"
#include "tiltwall/wall.hpp"

namespace tiltwall {

/// Search bounds for candidate-wall enumeration.  Ranks are scanned from
/// rank_min to rank_max in steps of rank_step; degrees and ch2 values are
/// scanned over the lattices deg_step * Z and ch2_step * Z.  Candidates must
/// additionally have integer degree and half-integer ch2 (see
/// is_lattice_class), so steps coarser than the defaults restrict the search
/// and finer ones only add points that the lattice filter rejects.
struct EnumerationConfig {
    Integer rank_min;
    Integer rank_max;
    Integer rank_step{1};
    Rational deg_step{1};
    Rational ch2_step{1, 2};
    Rational min_radius_sq{0};
    unsigned threads{1};
};

/// A destabilizer class that survived every necessary numerical condition,
/// together with its wall (always a semicircle).  filters_passed holds the
/// rank-regime tags: "case1" when rank(f) > rank(e), "case2" when
/// 0 < rank(f) <= rank(e), nothing otherwise.
struct CandidateWall {
    ChernClass destabilizer;
    Wall wall;
    std::vector<std::string> filters_passed;
};

/// Default scan range [-B, B] with B = |rank(e)| + ceil(|chi(e)|) + 2; wide
/// enough in practice, and validated in tests by widening until the candidate
/// set stabilizes.
std::pair<Integer, Integer> default_rank_range(const Surface& s, const ChernClass& e);

/// All lattice classes f with rank in the configured range such that
///   (i)   the wall of (e, f) is a semicircle with radius_sq >= min_radius_sq,
///   (ii)  discriminant(f) >= 0 and discriminant(e - f) >= 0,
///   (iii) at the wall center C: 0 <= deg(f) - C*rank(f) <= deg(e) - C*rank(e).
/// Requires rank(e) != 0 and discriminant(e) >= 0.  The scan box per rank is
/// provably exhaustive for these filters (see the derivation in the
/// implementation).  Output is sorted by radius_sq descending, ties broken by
/// (rank, deg, ch2) ascending, so the result is independent of thread count.
std::vector<CandidateWall> enumerate_candidate_walls(const ChernClass& e,
                                                     const EnumerationConfig& config);

/// CSV serialization with header "rank,deg,ch2,center,radius_sq,filters";
/// rationals rendered as "p" or "p/q", filter tags joined by ';'.
std::string candidates_to_csv(const std::vector<CandidateWall>& candidates);

}  // namespace tiltwall
