#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mahc/analytic.hpp"
#include "mahc/geometry.hpp"
#include "mahc/library.hpp"
#include "mahc/placement.hpp"

namespace mahc {

/// Which cells a user can reach: cell 1 only, cell 2 only, or both.
struct AccessSet {
  bool cell1 = false;
  bool cell2 = false;
};

/// Result of one simulated delivery phase.
struct TrialOutcome {
  int uncoded_hits = 0;          // requests served entirely from accessible
                                 // caches (uncoded copy, or coded content
                                 // reached from both cells)
  int coded_steps = 0;           // H = max of per-cell distinct coded queues
  int uncached_broadcasts = 0;   // distinct contents broadcast whole
  int suppressed_coded_requests = 0;  // coded queue entries cancelled because
                                      // the same content was broadcast whole
  double total_load_bits = 0.0;
  std::vector<int> demands;      // sampled demand vector, 1-based contents
};

/// Aggregate statistics over repeated trials.
struct TrialStatistics {
  int runs = 0;
  double mean_load = 0.0;
  double std_load = 0.0;      // sample standard deviation (n - 1 divisor)
  double ci_halfwidth = 0.0;  // 1.96 * std / sqrt(runs)
};

/// Draws Z user positions uniformly over the union of the two disks
/// (rejection sampling over the union's bounding box) and reduces each to
/// its access set. Throws std::invalid_argument if the union has zero area.
std::vector<AccessSet> sample_user_positions(const TwoCellTopology& topology,
                                             std::mt19937_64& engine);

/// Draws `count` independent demands from the popularity distribution by
/// inverse-CDF lookup. Returned contents are 1-based.
std::vector<int> sample_demands(const ContentLibrary& library, int count,
                                std::mt19937_64& engine);

/// Executes one delivery phase for fixed user locations and demands:
///   - a request served by an accessible uncoded copy costs nothing;
///   - a coded-cached content requested from the overlap area costs nothing
///     (the user reaches every fragment locally);
///   - a coded-cached content requested from a cell's exclusive area joins
///     that cell's queue; duplicates at the same cell collapse; the coded
///     phase runs H = max(queue sizes) steps, each costing F*(2-T)/(T+1);
///   - a content unreachable from the user's cells is broadcast whole, once
///     per distinct content (cost F each), and cancels any queued coded
///     request for the same content.
TrialOutcome simulate_delivery(const ContentLibrary& library,
                               const TwoCellTopology& topology,
                               const Placement& placement,
                               const std::vector<AccessSet>& access_sets,
                               const std::vector<int>& demands);

/// Runs `runs` independent trials with per-trial engines derived from
/// (base_seed, trial_index) and returns mean/std/CI of the total load.
TrialStatistics run_trials(const ContentLibrary& library,
                           const TwoCellTopology& topology,
                           const Placement& placement, int runs,
                           std::uint64_t base_seed);

/// Single-trial convenience used by tests: samples positions and demands
/// from the given engine, then simulates delivery.
TrialOutcome run_single_trial(const ContentLibrary& library,
                              const TwoCellTopology& topology,
                              const Placement& placement,
                              std::mt19937_64& engine);

}  // namespace mahc
