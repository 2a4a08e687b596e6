#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mahc/geometry.hpp"
#include "mahc/library.hpp"
#include "mahc/optimizer.hpp"
#include "mahc/placement.hpp"
#include "mahc/simulator.hpp"

namespace mahc {

/// Thrown for unusable experiment configurations (unknown keys, unknown
/// sweep variable, missing popularity file, conflicting options). The CLI
/// maps it to the usage exit code.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SweepSpec {
  std::string variable;  // one of: alpha, overlap_ratio, users
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;

  /// Grid points from..to inclusive (with a half-step tolerance at the top
  /// end so 0.7 + 13*0.1 still lands on 2.0). Throws ConfigError for a
  /// non-positive step or unknown variable.
  std::vector<double> points() const;
};

/// Everything needed to run one evaluation/optimization/sweep. Defaults are
/// the reference setup: N = 10 contents, M = 3, Zipf alpha = 1.2, two unit
/// circles at distance 0.8, Z = 10 users, 2000 simulation runs.
struct ExperimentConfig {
  int content_count = 10;
  double content_size_bits = 1.0;
  int cache_capacity = 3;
  double alpha = 1.2;
  std::string popularity_file;  // when nonempty, overrides alpha
  double radius = 1.0;          // both cells
  double distance = 0.8;
  std::optional<double> overlap_ratio;  // when set, overrides distance
  int user_count = 10;
  int runs = 2000;
  std::uint64_t seed = 1;
  std::vector<Scheme> schemes = {Scheme::Mahc, Scheme::Macc, Scheme::Uncoded};
  bool use_heuristic = false;
  int heuristic_slack = 2;
  std::optional<SweepSpec> sweep;

  ContentLibrary make_library() const;
  TwoCellTopology make_topology() const;

  /// Runs the configured optimizer (exact or heuristic) for one scheme.
  OptimizationResult run_optimizer(const ContentLibrary& library,
                                   const TwoCellTopology& topology,
                                   Scheme scheme) const;
};

/// Applies "key = value" lines from a flat config file. Unknown keys throw
/// ConfigError; '#' starts a comment. Keys are the long flag names with '-'
/// or '_' interchangeable (contents, capacity, alpha, popularity-file,
/// radius, distance, overlap-ratio, users, runs, seed, schemes, sweep,
/// from, to, step, heuristic-slack, exact).
void apply_config_file(ExperimentConfig& config, const std::string& path);
void apply_config_key(ExperimentConfig& config, const std::string& key,
                      const std::string& value);

/// Comma-separated scheme list ("mahc,macc,uncoded"); throws ConfigError on
/// unknown names.
std::vector<Scheme> parse_scheme_list(const std::string& text);

/// One CSV row of a sweep: the optimized placement of one scheme at one
/// sweep point, with its analytic load split and simulated statistics.
struct SweepRow {
  std::string sweep_var;
  double sweep_value = 0.0;
  Scheme scheme = Scheme::Mahc;
  int coded_share = 0;  // M_p of the winning placement
  int coded_count = 0;  // N_p of the winning placement
  double r_analytic = 0.0;
  double r1_analytic = 0.0;
  double r2_analytic = 0.0;
  double r_sim_mean = 0.0;
  double r_sim_ci_low = 0.0;
  double r_sim_ci_high = 0.0;
  int runs = 0;
  std::uint64_t seed = 0;
};

/// Optimizes and simulates every (sweep point, scheme) pair. Rows are
/// ordered by sweep point, then by the configured scheme order. All loads
/// are normalized to the content size. Throws ConfigError when the config
/// carries no sweep specification.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config);

/// Writes rows with the fixed header
/// sweep_var,sweep_value,scheme,M_p,N_p,r_analytic,r1_analytic,r2_analytic,
/// r_sim_mean,r_sim_ci_low,r_sim_ci_high,runs,seed. Deterministic float
/// formatting, so equal inputs give byte-identical output.
void write_csv(std::ostream& output, const std::vector<SweepRow>& rows);

/// Shared float formatting for CSV and reports (fixed %.12g, stable across
/// runs and platforms for identical doubles).
std::string format_double(double value);

}  // namespace mahc
