#pragma once

#include "mahc/placement.hpp"

namespace mahc {

/// Two circular small cells with overlapping coverage, plus the user
/// population uniformly spread over the union of the two disks.
/// Cell 1 is centered at the origin, cell 2 at (distance, 0).
struct TwoCellTopology {
  double radius1;
  double radius2;
  double distance;  // center-to-center
  int user_count;   // Z

  /// Throws std::invalid_argument unless radius1, radius2 > 0,
  /// distance >= 0 and user_count >= 1.
  TwoCellTopology(double radius1, double radius2, double distance,
                  int user_count);

  double area1() const;
  double area2() const;
};

/// Exact circle-circle intersection (lens) area. Zero for disjoint circles
/// (distance >= r1 + r2); the smaller disk's area when one circle contains
/// the other (distance <= |r1 - r2|).
double intersection_area(const TwoCellTopology& topology);

double union_area(const TwoCellTopology& topology);

/// intersection_area / union_area, in [0, 1].
double overlap_ratio(const TwoCellTopology& topology);

/// Probability that a uniformly placed user is covered only by `cell`
/// (1 or 2): (S_c - S_intersection) / S_union.
double exclusive_fraction(const TwoCellTopology& topology, int cell);

/// Fraction of the union area in which a user can reach content `n` from
/// some accessible cache: 1 if the content is coded-cached or uncoded-cached
/// at both cells, S_c/S_union if uncoded-cached only at cell c, 0 if not
/// cached anywhere.
double cached_area_fraction(const TwoCellTopology& topology,
                            const Placement& placement, int content);

/// Inverts the overlap ratio: finds the center distance at which two circles
/// of the given radii overlap with intersection/union == target_ratio.
/// Bisection to 1e-9 on the ratio; exact at the endpoints (ratio 0 maps to
/// r1 + r2, the maximum attainable ratio maps to distance 0). Throws
/// std::invalid_argument when the target exceeds the ratio at distance 0.
double distance_for_overlap_ratio(double radius1, double radius2,
                                  double target_ratio);

}  // namespace mahc
