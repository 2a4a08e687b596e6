#include "mahc/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace mahc {

namespace {

// Calls fn(subset) for every size-k subset of the ascending candidate list,
// in lexicographic order of the chosen elements.
template <typename Fn>
void for_each_combination(const std::vector<int>& candidates, int k, Fn&& fn) {
  const int n = static_cast<int>(candidates.size());
  if (k < 0 || k > n) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    for (int i = 0; i < k; ++i) {
      pick[static_cast<std::size_t>(i)] =
          candidates[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    fn(pick);
    if (k == 0) return;
    int pos = k - 1;
    while (pos >= 0 &&
           idx[static_cast<std::size_t>(pos)] == n - k + pos) {
      --pos;
    }
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      idx[static_cast<std::size_t>(i)] =
          idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

// Enumerates every placement with the given memory split whose contents are
// drawn from the canonical prefix 1..candidate_limit (the most popular
// contents, since the library is popularity-sorted).
void enumerate_split(int cache_capacity, int coded_share, int coded_count,
                     int candidate_limit, bool symmetric_cells,
                     const std::function<void(const Placement&)>& visit) {
  std::vector<int> candidates(static_cast<std::size_t>(candidate_limit));
  for (int i = 0; i < candidate_limit; ++i) {
    candidates[static_cast<std::size_t>(i)] = i + 1;
  }
  const int uncoded_size = cache_capacity - coded_share;

  for_each_combination(candidates, coded_count, [&](const std::vector<int>&
                                                        coded) {
    std::vector<int> remaining;
    remaining.reserve(candidates.size() - coded.size());
    std::set_difference(candidates.begin(), candidates.end(), coded.begin(),
                        coded.end(), std::back_inserter(remaining));
    for_each_combination(remaining, uncoded_size, [&](const std::vector<int>&
                                                          first) {
      for_each_combination(remaining, uncoded_size,
                           [&](const std::vector<int>& second) {
        if (symmetric_cells &&
            std::lexicographical_compare(second.begin(), second.end(),
                                         first.begin(), first.end())) {
          return;  // the swapped pair was already emitted
        }
        Placement placement;
        placement.cache_capacity = cache_capacity;
        placement.coded_share = coded_share;
        placement.coded = coded;
        placement.uncoded1 = first;
        placement.uncoded2 = second;
        visit(placement);
      });
    });
  });
}

// Yields the (coded_share, coded_count) pairs of a scheme in search order.
// The coded set must be jointly deliverable by the two caches to the overlap
// area (2 * coded_share >= coded_count), since the load model charges those
// users nothing.
std::vector<std::pair<int, int>> memory_splits(Scheme scheme, int capacity,
                                               int content_count) {
  std::vector<std::pair<int, int>> splits;
  for (int coded_share = 0; coded_share <= capacity; ++coded_share) {
    if (scheme == Scheme::Macc && coded_share != capacity) continue;
    if (scheme == Scheme::Uncoded && coded_share != 0) continue;
    if (coded_share == 0) {
      splits.emplace_back(0, 0);
      continue;
    }
    const int max_coded = std::min(2 * coded_share, content_count);
    for (int coded_count = coded_share + 1; coded_count <= max_coded;
         ++coded_count) {
      splits.emplace_back(coded_share, coded_count);
    }
  }
  return splits;
}

OptimizationResult search(const ContentLibrary& library,
                          const TwoCellTopology& topology, Scheme scheme,
                          int cache_capacity, std::optional<int> slack) {
  if (cache_capacity < 0 || cache_capacity > library.content_count()) {
    throw std::invalid_argument("cache capacity must lie in [0, N]");
  }
  const auto start = std::chrono::steady_clock::now();
  const bool symmetric = topology.radius1 == topology.radius2;

  OptimizationResult result;
  result.scheme = scheme;
  bool found = false;
  const auto consider = [&](const Placement& placement) {
    ++result.evaluations;
    const LoadBreakdown load = analytic_load(topology, library, placement);
    if (!found || load.total() < result.best_load.total()) {
      found = true;
      result.best_placement = placement;
      result.best_load = load;
    }
  };

  const int n = library.content_count();
  for (const auto& [coded_share, coded_count] :
       memory_splits(scheme, cache_capacity, n)) {
    int limit = n;
    if (slack) {
      limit = std::min(
          n, coded_count + 2 * (cache_capacity - coded_share) + *slack);
    }
    enumerate_split(cache_capacity, coded_share, coded_count, limit,
                    symmetric, consider);
  }
  if (!found) {
    throw std::invalid_argument(
        std::string("no feasible placement for scheme ") +
        scheme_name(scheme) + " with capacity " +
        std::to_string(cache_capacity) + " over " + std::to_string(n) +
        " contents");
  }
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace

void enumerate_placements(const ContentLibrary& library, Scheme scheme,
                          int cache_capacity, bool symmetric_cells,
                          const std::function<void(const Placement&)>& visit) {
  if (cache_capacity < 0 || cache_capacity > library.content_count()) {
    throw std::invalid_argument("cache capacity must lie in [0, N]");
  }
  const int n = library.content_count();
  for (const auto& [coded_share, coded_count] :
       memory_splits(scheme, cache_capacity, n)) {
    enumerate_split(cache_capacity, coded_share, coded_count, n,
                    symmetric_cells, visit);
  }
}

OptimizationResult optimize(const ContentLibrary& library,
                            const TwoCellTopology& topology, Scheme scheme,
                            int cache_capacity) {
  if (library.content_count() > kMaxExactContentCount) {
    throw CapacityError(
        "exact search is limited to " +
        std::to_string(kMaxExactContentCount) +
        " contents (got " + std::to_string(library.content_count()) +
        "); rerun with the heuristic search (--heuristic-slack)");
  }
  return search(library, topology, scheme, cache_capacity, std::nullopt);
}

OptimizationResult optimize_heuristic(const ContentLibrary& library,
                                      const TwoCellTopology& topology,
                                      Scheme scheme, int cache_capacity,
                                      int slack) {
  if (slack < 0) {
    throw std::invalid_argument("heuristic slack must be nonnegative");
  }
  return search(library, topology, scheme, cache_capacity, slack);
}

}  // namespace mahc
