#include "mahc/validation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "mahc/analytic.hpp"
#include "mahc/optimizer.hpp"
#include "mahc/simulator.hpp"

namespace mahc {

std::vector<double> enumeration_distinct_tail(const TwoCellTopology& topology,
                                              const ContentLibrary& library,
                                              const Placement& placement,
                                              int cell) {
  const int z = topology.user_count;
  const int n = library.content_count();
  const double v1 = exclusive_fraction(topology, 1);
  const double v2 = exclusive_fraction(topology, 2);
  const double region_prob[3] = {v1, v2, 1.0 - v1 - v2};

  // Bit position of each coded content, for tracking distinct sets.
  std::vector<int> coded_bit(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < placement.coded.size(); ++i) {
    coded_bit[static_cast<std::size_t>(placement.coded[i])] =
        static_cast<int>(i);
  }

  std::vector<double> dist(static_cast<std::size_t>(z) + 1, 0.0);
  // Walks every (region, request) assignment of all users; mask tracks the
  // distinct coded contents requested from the target cell's exclusive area.
  const auto walk = [&](const auto& self, int user, std::uint64_t mask,
                        double probability) -> void {
    if (user == z) {
      dist[static_cast<std::size_t>(std::popcount(mask))] += probability;
      return;
    }
    for (int region = 0; region < 3; ++region) {
      if (region_prob[region] == 0.0) continue;
      for (int content = 1; content <= n; ++content) {
        std::uint64_t next = mask;
        if (region == cell - 1 && coded_bit[static_cast<std::size_t>(
                                      content)] >= 0) {
          next |= std::uint64_t{1}
                  << coded_bit[static_cast<std::size_t>(content)];
        }
        self(self, user + 1, next,
             probability * region_prob[region] * library.popularity(content));
      }
    }
  };
  walk(walk, 0, 0, 1.0);

  std::vector<double> tail(dist.size(), 0.0);
  tail[0] = 1.0;
  double acc = 0.0;
  for (std::size_t i = dist.size() - 1; i >= 1; --i) {
    acc += dist[i];
    tail[i] = acc;
  }
  return tail;
}

namespace {

std::string observed_vs_expected(double observed, const std::string& relation,
                                 double bound) {
  std::ostringstream text;
  text.precision(12);
  text << "observed " << observed << ", expected " << relation << ' ' << bound;
  return text.str();
}

CheckResult check_geometry_fixture() {
  const TwoCellTopology topology(1.0, 1.0, 0.8, 1);
  const double ratio = overlap_ratio(topology);
  return {"geometry overlap fixture (unit circles, d = 0.8)",
          std::abs(ratio - 0.3375) <= 0.0005,
          observed_vs_expected(ratio, "within 0.0005 of", 0.3375)};
}

CheckResult check_recursion_oracle() {
  double worst = 0.0;
  std::string worst_case = "none";
  for (double v : {0.2, 0.33, 0.5}) {
    // Equal radii: an overlap ratio of 1 - 2v gives exclusive fractions v.
    const double d = distance_for_overlap_ratio(1.0, 1.0, 1.0 - 2.0 * v);
    for (int n = 1; n <= 3; ++n) {
      const ContentLibrary library(zipf_popularity(n, 0.0));
      for (int z = 1; z <= 4; ++z) {
        const TwoCellTopology topology(1.0, 1.0, d, z);
        for (int coded_count = 1; coded_count <= n; ++coded_count) {
          Placement placement;
          placement.coded.resize(static_cast<std::size_t>(coded_count));
          for (int i = 0; i < coded_count; ++i) {
            placement.coded[static_cast<std::size_t>(i)] = i + 1;
          }
          for (int cell : {1, 2}) {
            const auto model = distinct_coded_tail_probabilities(
                topology, library, placement, cell);
            const auto oracle = enumeration_distinct_tail(topology, library,
                                                          placement, cell);
            for (std::size_t i = 0; i < model.size(); ++i) {
              const double err = std::abs(model[i] - oracle[i]);
              if (err > worst) {
                worst = err;
                std::ostringstream text;
                text << "v=" << v << " N=" << n << " Z=" << z
                     << " N_coded=" << coded_count << " cell=" << cell
                     << " i=" << i;
                worst_case = text.str();
              }
            }
          }
        }
      }
    }
  }
  return {"distinct-request recursion vs. brute-force enumeration",
          worst <= 1e-12,
          observed_vs_expected(worst, "<=", 1e-12) + " (worst at " +
              worst_case + ")"};
}

CheckResult check_recursion_normalization() {
  const ContentLibrary library(zipf_popularity(6, 1.2));
  Placement placement;
  placement.cache_capacity = 2;
  placement.coded_share = 2;
  placement.coded = {1, 2, 3};
  double worst = 0.0;
  for (int z = 1; z <= 16; ++z) {
    const TwoCellTopology topology(1.0, 1.0, 0.8, z);
    for (int cell : {1, 2}) {
      const auto dist =
          distinct_coded_distribution(topology, library, placement, cell);
      double total = 0.0;
      for (double p : dist) total += p;
      worst = std::max(worst, std::abs(total - 1.0));
    }
  }
  return {"recursion conserves probability mass (Z = 1..16)", worst <= 1e-9,
          observed_vs_expected(worst, "<=", 1e-9)};
}

CheckResult check_scheme_dominance() {
  const ContentLibrary library(zipf_popularity(10, 1.2));
  const TwoCellTopology topology(1.0, 1.0, 0.8, 10);
  const double mahc =
      optimize(library, topology, Scheme::Mahc, 3).best_load.total();
  const double macc =
      optimize(library, topology, Scheme::Macc, 3).best_load.total();
  const double uncoded =
      optimize(library, topology, Scheme::Uncoded, 3).best_load.total();
  const bool ok = mahc <= macc && mahc <= uncoded;
  std::ostringstream text;
  text.precision(12);
  text << "mahc " << mahc << ", macc " << macc << ", uncoded " << uncoded;
  return {"hybrid optimum dominates both baselines (reference setup)", ok,
          text.str()};
}

CheckResult check_simulation_agreement(std::uint64_t seed) {
  const ContentLibrary library(zipf_popularity(10, 1.2));
  const TwoCellTopology topology(1.0, 1.0, 0.8, 10);
  const auto result = optimize(library, topology, Scheme::Mahc, 3);
  const double analytic = result.best_load.total();
  const auto stats =
      run_trials(library, topology, result.best_placement, 2000, seed);
  const double diff = std::abs(stats.mean_load - analytic);
  const double bound = std::max(3.0 * stats.ci_halfwidth, 0.05 * analytic);
  std::ostringstream text;
  text.precision(12);
  text << "analytic " << analytic << ", simulated " << stats.mean_load
       << " +- " << stats.ci_halfwidth << " (95% CI), |diff| " << diff
       << " <= " << bound;
  return {"simulated mean load matches the analytic model", diff <= bound,
          text.str()};
}

}  // namespace

std::vector<CheckResult> run_validation_suite(std::uint64_t seed) {
  std::vector<CheckResult> results;
  results.push_back(check_geometry_fixture());
  results.push_back(check_recursion_oracle());
  results.push_back(check_recursion_normalization());
  results.push_back(check_scheme_dominance());
  results.push_back(check_simulation_agreement(seed));
  return results;
}

}  // namespace mahc
