#pragma once

#include <vector>

#include "mahc/geometry.hpp"
#include "mahc/library.hpp"
#include "mahc/placement.hpp"

namespace mahc {

/// Expected backhaul load, split into the coded multicast part and the
/// residual unicast part. All values are in the same unit as the content
/// size (bits by default).
struct LoadBreakdown {
  double coded = 0.0;    // r1
  double uncoded = 0.0;  // r2
  double total() const { return coded + uncoded; }
};

/// Probability that the next request is the j-th distinct coded content
/// requested from `cell`'s exclusive area, given j-1 are already collected:
/// zero for j > N_p, else (1 - (j-1)/N_p) * (coded popularity mass) * v_cell.
double next_distinct_probability(const TwoCellTopology& topology,
                                 const ContentLibrary& library,
                                 const Placement& placement, int cell, int j);

/// Distribution of the per-cell count of *distinct* coded contents requested
/// by users exclusive to one cell. Computed by a dynamic program over users:
/// each additional exclusive user extends the distinct set by one with
/// probability next_distinct_probability(j).
///
/// Returned vector is indexed j = 0..user_count with
/// dist[j] = Pr{exactly j distinct coded contents are requested}.
/// The recursion conserves probability mass (entries sum to 1).
std::vector<double> distinct_coded_distribution(const TwoCellTopology& topology,
                                                const ContentLibrary& library,
                                                const Placement& placement,
                                                int cell);

/// Tail sums of the same distribution, indexed i = 0..user_count with
/// tail[i] = Pr{at least i distinct coded contents are requested}.
/// tail[0] == 1 always.
std::vector<double> distinct_coded_tail_probabilities(
    const TwoCellTopology& topology, const ContentLibrary& library,
    const Placement& placement, int cell);

/// Probability that a coded delivery step is idle at both cells:
/// prod_c (1 - tail_c[step]). Steps beyond the table (or beyond the user
/// count) are idle with probability 1.
double step_idle_probability(const std::vector<double>& tail1,
                             const std::vector<double>& tail2, int step);

/// Analytic expected shared-link load of a hybrid placement:
///   coded part   r1 = F * (2 - T)/(T + 1) * sum_i (1 - prod_c (1 - P_{c,i}))
///   uncoded part r2 = F * sum_n (1 - (1 - p_n * (1 - s_n))^Z)
/// where T = 2 M_p / N_p, P_{c,i} are the tail probabilities above and s_n
/// is the cached-area fraction of content n. The coded part is zero when
/// the placement has no coded contents or when every coded content fits
/// uncoded (N_p <= M_p).
LoadBreakdown analytic_load(const TwoCellTopology& topology,
                            const ContentLibrary& library,
                            const Placement& placement);

/// Conventional single-cache coded-caching load for K users, library size N,
/// cache size M (unit content size F):
///   R = K * (1 - M/N) * min{ 1/(1 + K*M/N), N/K }.
double conventional_coded_load(int user_count, int content_count,
                               double cache_capacity,
                               double content_size_bits = 1.0);

}  // namespace mahc
