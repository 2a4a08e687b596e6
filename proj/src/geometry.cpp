#include "mahc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mahc {

namespace {

double clamped_acos(double x) {
  return std::acos(std::clamp(x, -1.0, 1.0));
}

}  // namespace

TwoCellTopology::TwoCellTopology(double radius1, double radius2,
                                 double distance, int user_count)
    : radius1(radius1),
      radius2(radius2),
      distance(distance),
      user_count(user_count) {
  if (!(radius1 > 0.0) || !(radius2 > 0.0)) {
    throw std::invalid_argument("cell radii must be positive");
  }
  if (!(distance >= 0.0)) {
    throw std::invalid_argument("center distance must be nonnegative");
  }
  if (user_count < 1) {
    throw std::invalid_argument("user count must be at least 1");
  }
}

double TwoCellTopology::area1() const {
  return std::numbers::pi * radius1 * radius1;
}

double TwoCellTopology::area2() const {
  return std::numbers::pi * radius2 * radius2;
}

double intersection_area(const TwoCellTopology& topology) {
  const double r1 = topology.radius1;
  const double r2 = topology.radius2;
  const double d = topology.distance;
  if (d >= r1 + r2) {
    return 0.0;
  }
  if (d <= std::abs(r1 - r2)) {
    const double r = std::min(r1, r2);
    return std::numbers::pi * r * r;
  }
  // Two circular segments, one per circle, sharing the lens chord.
  const double term1 =
      r1 * r1 * clamped_acos((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1));
  const double term2 =
      r2 * r2 * clamped_acos((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2));
  const double under = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) *
                       (d + r1 + r2);
  return term1 + term2 - 0.5 * std::sqrt(std::max(under, 0.0));
}

double union_area(const TwoCellTopology& topology) {
  return topology.area1() + topology.area2() - intersection_area(topology);
}

double overlap_ratio(const TwoCellTopology& topology) {
  return intersection_area(topology) / union_area(topology);
}

double exclusive_fraction(const TwoCellTopology& topology, int cell) {
  if (cell != 1 && cell != 2) {
    throw std::invalid_argument("cell index must be 1 or 2");
  }
  const double own = cell == 1 ? topology.area1() : topology.area2();
  return (own - intersection_area(topology)) / union_area(topology);
}

double cached_area_fraction(const TwoCellTopology& topology,
                            const Placement& placement, int content) {
  const bool in1 = placement.contains_uncoded(content, 1);
  const bool in2 = placement.contains_uncoded(content, 2);
  if (placement.contains_coded(content) || (in1 && in2)) {
    return 1.0;
  }
  if (in1) {
    return topology.area1() / union_area(topology);
  }
  if (in2) {
    return topology.area2() / union_area(topology);
  }
  return 0.0;
}

double distance_for_overlap_ratio(double radius1, double radius2,
                                  double target_ratio) {
  if (!(radius1 > 0.0) || !(radius2 > 0.0)) {
    throw std::invalid_argument("cell radii must be positive");
  }
  const auto ratio_at = [&](double d) {
    return overlap_ratio(TwoCellTopology(radius1, radius2, d, 1));
  };
  const double max_ratio = ratio_at(0.0);
  if (target_ratio > max_ratio + 1e-12) {
    throw std::invalid_argument(
        "overlap ratio " + std::to_string(target_ratio) +
        " is unreachable; maximum for these radii is " +
        std::to_string(max_ratio));
  }
  if (target_ratio >= max_ratio) {
    return 0.0;
  }
  if (target_ratio <= 0.0) {
    return radius1 + radius2;
  }
  // The ratio decreases monotonically from max_ratio at d = 0 down to 0 at
  // d = r1 + r2; plain bisection is exact enough and branch-free.
  double lo = 0.0;
  double hi = radius1 + radius2;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (ratio_at(mid) > target_ratio) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15 * (radius1 + radius2)) {
      break;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mahc
