#include "mahc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mahc {

namespace {

double coded_popularity_mass(const ContentLibrary& library,
                             const Placement& placement) {
  double mass = 0.0;
  for (int content : placement.coded) {
    mass += library.popularity(content);
  }
  return mass;
}

double next_distinct_from_parts(int coded_count, double coded_mass, double v,
                                int j) {
  if (j < 1) {
    throw std::invalid_argument("distinct-request index j starts at 1");
  }
  if (j > coded_count) return 0.0;
  return (1.0 - static_cast<double>(j - 1) / coded_count) * coded_mass * v;
}

}  // namespace

double next_distinct_probability(const TwoCellTopology& topology,
                                 const ContentLibrary& library,
                                 const Placement& placement, int cell, int j) {
  return next_distinct_from_parts(placement.coded_count(),
                                  coded_popularity_mass(library, placement),
                                  exclusive_fraction(topology, cell), j);
}

std::vector<double> distinct_coded_distribution(const TwoCellTopology& topology,
                                                const ContentLibrary& library,
                                                const Placement& placement,
                                                int cell) {
  const int z_max = topology.user_count;
  const double v = exclusive_fraction(topology, cell);
  std::vector<double> dist(static_cast<std::size_t>(z_max) + 1, 0.0);
  dist[0] = 1.0;

  const int np = placement.coded_count();
  if (np == 0) {
    return dist;
  }
  const double coded_mass = coded_popularity_mass(library, placement);
  const auto q = [&](int j) {
    return next_distinct_from_parts(np, coded_mass, v, j);
  };

  // dist[j] = Pr{j distinct coded requests after z users}; updated in place
  // from high j to low so the z-1 values are still intact when read.
  for (int z = 1; z <= z_max; ++z) {
    for (int j = z; j >= 1; --j) {
      dist[static_cast<std::size_t>(j)] =
          dist[static_cast<std::size_t>(j)] * (1.0 - q(j + 1)) +
          dist[static_cast<std::size_t>(j - 1)] * q(j);
    }
    dist[0] *= 1.0 - q(1);
  }
  return dist;
}

std::vector<double> distinct_coded_tail_probabilities(
    const TwoCellTopology& topology, const ContentLibrary& library,
    const Placement& placement, int cell) {
  const auto dist =
      distinct_coded_distribution(topology, library, placement, cell);
  std::vector<double> tail(dist.size(), 0.0);
  tail[0] = 1.0;
  double acc = 0.0;
  for (std::size_t i = dist.size() - 1; i >= 1; --i) {
    acc += dist[i];
    tail[i] = acc;
  }
  return tail;
}

double step_idle_probability(const std::vector<double>& tail1,
                             const std::vector<double>& tail2, int step) {
  if (step < 1) {
    throw std::invalid_argument("delivery steps are numbered from 1");
  }
  const auto tail_at = [step](const std::vector<double>& tail) {
    return step < static_cast<int>(tail.size())
               ? tail[static_cast<std::size_t>(step)]
               : 0.0;
  };
  return (1.0 - tail_at(tail1)) * (1.0 - tail_at(tail2));
}

LoadBreakdown analytic_load(const TwoCellTopology& topology,
                            const ContentLibrary& library,
                            const Placement& placement) {
  const double f = library.content_size_bits();
  LoadBreakdown load;

  // Coded multicast part: only placements whose coded set exceeds the coded
  // share leave fragments to fetch over the shared link.
  if (placement.coded_count() > placement.coded_share) {
    const double step = coded_step_cost(placement, f);
    const auto tail1 =
        distinct_coded_tail_probabilities(topology, library, placement, 1);
    const auto tail2 =
        distinct_coded_tail_probabilities(topology, library, placement, 2);
    double expected_steps = 0.0;
    for (int i = 1; i <= topology.user_count; ++i) {
      expected_steps += 1.0 - step_idle_probability(tail1, tail2, i);
    }
    load.coded = step * expected_steps;
  }

  // Residual unicast part: each content missing from a user's reachable
  // caches is broadcast whole, once, if anyone requests it that way.
  double expected_misses = 0.0;
  for (int n = 1; n <= library.content_count(); ++n) {
    const double covered = cached_area_fraction(topology, placement, n);
    const double miss = library.popularity(n) * (1.0 - covered);
    expected_misses +=
        1.0 - std::pow(1.0 - miss, static_cast<double>(topology.user_count));
  }
  load.uncoded = f * expected_misses;
  return load;
}

double conventional_coded_load(int user_count, int content_count,
                               double cache_capacity,
                               double content_size_bits) {
  if (user_count < 1 || content_count < 1) {
    throw std::invalid_argument("user and content counts must be positive");
  }
  if (cache_capacity < 0.0 || cache_capacity > content_count) {
    throw std::invalid_argument("cache capacity must lie in [0, N]");
  }
  const double k = static_cast<double>(user_count);
  const double n = static_cast<double>(content_count);
  const double m = cache_capacity;
  return content_size_bits * k * (1.0 - m / n) *
         std::min(1.0 / (1.0 + k * m / n), n / k);
}

}  // namespace mahc
