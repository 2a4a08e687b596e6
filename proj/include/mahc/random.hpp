#pragma once

#include <cstdint>
#include <random>

namespace mahc {

/// splitmix64 step; used to derive well-separated per-trial seeds from a
/// single base seed so that trial i of run (seed, i) is reproducible and
/// independent of how trials are batched.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seeds an mt19937_64 for one Monte-Carlo trial from (base_seed, trial).
std::mt19937_64 make_trial_engine(std::uint64_t base_seed,
                                  std::uint64_t trial_index);

/// Uniform double in [0, 1) with a fixed bit-level mapping (top 53 bits of
/// one engine draw). std::uniform_real_distribution is implementation
/// defined, which would break cross-platform reproducibility of seeded runs.
double uniform_unit(std::mt19937_64& engine);

/// Uniform double in [lo, hi).
double uniform_range(std::mt19937_64& engine, double lo, double hi);

}  // namespace mahc
