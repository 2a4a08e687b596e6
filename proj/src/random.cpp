#include "mahc/random.hpp"

namespace mahc {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_trial_engine(std::uint64_t base_seed,
                                  std::uint64_t trial_index) {
  // Two splitmix64 steps decorrelate trials even for adjacent seeds and
  // trial indices; mt19937_64's own seeding scrambles the result further.
  std::uint64_t state = base_seed ^ (0x5851f42d4c957f2dULL * trial_index);
  const std::uint64_t first = splitmix64(state);
  splitmix64(state);
  return std::mt19937_64(first ^ state);
}

double uniform_unit(std::mt19937_64& engine) {
  // Top 53 bits -> [0, 1). Fixed mapping; the standard library's
  // distribution objects are not bit-reproducible across implementations.
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

double uniform_range(std::mt19937_64& engine, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(engine);
}

}  // namespace mahc
