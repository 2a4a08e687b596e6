#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "mahc/analytic.hpp"
#include "mahc/geometry.hpp"
#include "mahc/library.hpp"
#include "mahc/placement.hpp"

namespace mahc {

/// Thrown when an exact search is requested beyond the supported library
/// size; the message points at the heuristic alternative.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct OptimizationResult {
  Placement best_placement;
  LoadBreakdown best_load;
  Scheme scheme = Scheme::Mahc;
  std::uint64_t evaluations = 0;
  double wall_time_seconds = 0.0;
};

/// Largest library size for which the exact exhaustive search is allowed
/// without the heuristic restriction.
inline constexpr int kMaxExactContentCount = 14;

/// Calls `visit` once for every placement that satisfies the scheme's
/// constraints and the placement invariants, in deterministic order:
/// ascending coded share, ascending coded-set size, lexicographic coded set,
/// lexicographic uncoded sets. When the two cells have equal radii the two
/// uncoded sets are interchangeable, so only ordered pairs with
/// uncoded_set_1 <= uncoded_set_2 (lexicographically) are emitted; pass
/// symmetric_cells = false to enumerate both orderings.
///
/// Only placements whose coded part is deliverable to overlap users entirely
/// from the two caches (2 * coded_share >= coded-set size, i.e. T >= 1) are
/// generated: the load model charges nothing for overlap-area coded requests,
/// which requires the two caches to jointly hold every coded content.
void enumerate_placements(const ContentLibrary& library, Scheme scheme,
                          int cache_capacity, bool symmetric_cells,
                          const std::function<void(const Placement&)>& visit);

/// Exhaustive minimization of the analytic load over all placements of the
/// scheme. Deterministic tie-breaking follows the enumeration order (the
/// first placement achieving the minimum wins). Throws CapacityError when
/// the library exceeds kMaxExactContentCount contents.
OptimizationResult optimize(const ContentLibrary& library,
                            const TwoCellTopology& topology, Scheme scheme,
                            int cache_capacity);

/// Same search restricted, for each (coded share, coded-set size) pair, to
/// the top (N_p + 2*(M - M_p) + slack) most popular contents. Exact within
/// the restriction; the result upper-bounds the exact optimum. No library
/// size limit.
OptimizationResult optimize_heuristic(const ContentLibrary& library,
                                      const TwoCellTopology& topology,
                                      Scheme scheme, int cache_capacity,
                                      int slack);

}  // namespace mahc
