#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mahc/geometry.hpp"
#include "mahc/library.hpp"
#include "mahc/placement.hpp"

namespace mahc {

/// Exact distribution of the number of distinct coded contents requested by
/// users exclusive to `cell`, computed by brute-force enumeration of every
/// (user region, user request) combination — 3 regions x N contents per
/// user, all Z users. Independent of the recursive model; used to check it.
/// Returns tail probabilities indexed 0..Z (tail[i] = Pr{count >= i}).
/// Cost grows as (3N)^Z, so only small instances are feasible.
std::vector<double> enumeration_distinct_tail(const TwoCellTopology& topology,
                                              const ContentLibrary& library,
                                              const Placement& placement,
                                              int cell);

/// One named self-check with an observed-vs-expected detail string.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in cross-module consistency suite: geometry overlap fixture,
/// recursion-vs-enumeration oracle on small uniform instances, recursion
/// mass conservation, scheme dominance at the reference configuration, and
/// simulator-vs-analytic agreement. Deterministic given the seed.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed);

}  // namespace mahc
