#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mahc/analytic.hpp"
#include "mahc/experiment.hpp"
#include "mahc/placement_file.hpp"
#include "mahc/validation.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

// Registers the shared configuration flags on a subcommand and remembers
// which ones the user actually passed, so they can override config-file
// values through the one key/value code path.
class ConfigFlags {
 public:
  void attach(CLI::App& app) {
    app.add_option("--config", config_path_,
                   "flat key = value config file; flags override its values");
    add(app, "contents", "number of contents in the library (N)");
    add(app, "capacity", "cache capacity per cell in contents (M)");
    add(app, "alpha", "Zipf popularity exponent");
    add(app, "popularity-file",
        "file of popularity values (overrides --alpha; defines N)");
    add(app, "radius", "coverage radius of both cells");
    add(app, "distance", "center-to-center cell distance");
    add(app, "overlap-ratio",
        "intersection/union coverage ratio (overrides --distance)");
    add(app, "users", "number of users (Z)");
    add(app, "runs", "Monte-Carlo trials per statistic");
    add(app, "seed", "base random seed");
    add(app, "schemes", "comma-separated schemes: mahc,macc,uncoded");
    add(app, "heuristic-slack",
        "enable the popularity-restricted search with this slack");
    exact_ = app.add_flag("--exact",
                          "force the exhaustive search (the default)");
    if (auto* slack = app.get_option("--heuristic-slack")) {
      exact_->excludes(slack);
    }
  }

  mahc::ExperimentConfig build() const {
    mahc::ExperimentConfig config;
    if (!config_path_.empty()) {
      mahc::apply_config_file(config, config_path_);
    }
    for (const auto& [key, entry] : flags_) {
      if (entry.option->count() > 0) {
        mahc::apply_config_key(config, key, entry.value);
      }
    }
    if (exact_->count() > 0) {
      mahc::apply_config_key(config, "exact", "true");
    }
    return config;
  }

  bool passed(const std::string& key) const {
    const auto it = flags_.find(key);
    return it != flags_.end() && it->second.option->count() > 0;
  }

 private:
  struct Entry {
    std::string value;
    CLI::Option* option = nullptr;
  };

  void add(CLI::App& app, const std::string& key, const std::string& help) {
    auto [it, inserted] = flags_.try_emplace(key);
    it->second.option = app.add_option("--" + key, it->second.value, help);
  }

  std::string config_path_;
  std::map<std::string, Entry> flags_;
  CLI::Option* exact_ = nullptr;
};

void print_analytic_report(std::ostream& out, const mahc::LoadBreakdown& load,
                           double content_size) {
  out << "r_analytic: " << mahc::format_double(load.total() / content_size)
      << '\n'
      << "r1_analytic: " << mahc::format_double(load.coded / content_size)
      << '\n'
      << "r2_analytic: " << mahc::format_double(load.uncoded / content_size)
      << '\n';
}

void print_statistics(std::ostream& out, const mahc::TrialStatistics& stats,
                      double content_size) {
  out << "runs: " << stats.runs << '\n'
      << "r_sim_mean: " << mahc::format_double(stats.mean_load / content_size)
      << '\n'
      << "r_sim_std: " << mahc::format_double(stats.std_load / content_size)
      << '\n'
      << "r_sim_ci95_halfwidth: "
      << mahc::format_double(stats.ci_halfwidth / content_size) << '\n';
}

// Loads and semantically validates a placement file; throws ConfigError on
// parse problems and reports validation failures via the returned flag.
mahc::Placement load_placement_or_fail(const std::string& path,
                                       const mahc::ContentLibrary& library,
                                       bool& valid) {
  const mahc::Placement placement = mahc::parse_placement_file(path);
  const auto verdict = mahc::validate_placement(placement, library);
  valid = verdict.ok;
  if (!verdict.ok) {
    std::cerr << "invalid placement: " << verdict.violation << '\n';
  }
  return placement;
}

int cmd_evaluate(const ConfigFlags& flags, const std::string& placement_path) {
  const mahc::ExperimentConfig config = flags.build();
  const mahc::ContentLibrary library = config.make_library();
  const mahc::TwoCellTopology topology = config.make_topology();

  bool valid = false;
  const mahc::Placement placement =
      load_placement_or_fail(placement_path, library, valid);
  if (!valid) return kExitCheckFailure;

  const mahc::LoadBreakdown load =
      mahc::analytic_load(topology, library, placement);
  print_analytic_report(std::cout, load, library.content_size_bits());
  if (flags.passed("runs")) {
    const auto stats = mahc::run_trials(library, topology, placement,
                                        config.runs, config.seed);
    print_statistics(std::cout, stats, library.content_size_bits());
  }
  return kExitSuccess;
}

int cmd_simulate(const ConfigFlags& flags, const std::string& placement_path) {
  const mahc::ExperimentConfig config = flags.build();
  const mahc::ContentLibrary library = config.make_library();
  const mahc::TwoCellTopology topology = config.make_topology();

  bool valid = false;
  const mahc::Placement placement =
      load_placement_or_fail(placement_path, library, valid);
  if (!valid) return kExitCheckFailure;

  const auto stats = mahc::run_trials(library, topology, placement,
                                      config.runs, config.seed);
  print_statistics(std::cout, stats, library.content_size_bits());
  return kExitSuccess;
}

int cmd_optimize(const ConfigFlags& flags, const std::string& out_path) {
  const mahc::ExperimentConfig config = flags.build();
  const mahc::ContentLibrary library = config.make_library();
  const mahc::TwoCellTopology topology = config.make_topology();
  if (!out_path.empty() && config.schemes.size() != 1) {
    throw mahc::ConfigError(
        "--out needs exactly one scheme (pass --schemes with a single name)");
  }

  bool first = true;
  for (mahc::Scheme scheme : config.schemes) {
    const mahc::OptimizationResult result =
        config.run_optimizer(library, topology, scheme);
    if (!first) std::cout << '\n';
    first = false;
    std::cout << "scheme: " << mahc::scheme_name(scheme) << '\n'
              << "M_p: " << result.best_placement.coded_share << '\n'
              << "N_p: " << result.best_placement.coded_count() << '\n';
    std::ostringstream body;
    mahc::write_placement(body, result.best_placement);
    std::cout << body.str();
    print_analytic_report(std::cout, result.best_load,
                          library.content_size_bits());
    std::cout << "evaluations: " << result.evaluations << '\n'
              << "wall_time_s: " << mahc::format_double(
                     result.wall_time_seconds) << '\n';
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        throw mahc::ConfigError("cannot write placement file '" + out_path +
                                "'");
      }
      mahc::write_placement(out, result.best_placement);
    }
  }
  return kExitSuccess;
}

// Sweep-only flags funnel through the same key/value path as everything
// else; (key, value, passed) triples come from the subcommand options.
int cmd_sweep(const ConfigFlags& flags,
              const std::vector<std::pair<std::string, std::string>>& extras,
              const std::string& out_path) {
  mahc::ExperimentConfig config = flags.build();
  for (const auto& [key, value] : extras) {
    mahc::apply_config_key(config, key, value);
  }
  const auto rows = mahc::run_sweep(config);
  if (out_path.empty()) {
    mahc::write_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw mahc::ConfigError("cannot write CSV file '" + out_path + "'");
    }
    mahc::write_csv(out, rows);
  }
  return kExitSuccess;
}

int cmd_validate(const ConfigFlags& flags) {
  const mahc::ExperimentConfig config = flags.build();
  const auto results = mahc::run_validation_suite(config.seed);
  bool all_passed = true;
  for (const auto& check : results) {
    all_passed = all_passed && check.passed;
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": "
              << check.detail << '\n';
  }
  std::cout << (all_passed ? "all checks passed" : "some checks FAILED")
            << '\n';
  return all_passed ? kExitSuccess : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hybrid coded/uncoded cache placement for a two-cell multi-access "
      "network: analytic load model, Monte-Carlo simulation, and exhaustive "
      "placement optimization"};
  app.require_subcommand(1);

  std::string eval_placement;
  std::string sim_placement;
  std::string optimize_out;
  std::string sweep_out;
  std::string sweep_var;
  std::string sweep_from;
  std::string sweep_to;
  std::string sweep_step;

  ConfigFlags eval_flags;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "analytic load of a placement file (add --runs to also "
                  "simulate it)");
  evaluate->add_option("placement", eval_placement, "placement file")
      ->required();
  eval_flags.attach(*evaluate);

  ConfigFlags sim_flags;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte-Carlo load statistics of a placement file");
  simulate->add_option("placement", sim_placement, "placement file")
      ->required();
  sim_flags.attach(*simulate);

  ConfigFlags opt_flags;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "search the minimum-load placement per scheme");
  optimize->add_option("--out", optimize_out,
                       "write the winning placement to this file");
  opt_flags.attach(*optimize);

  ConfigFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "optimize and simulate every scheme over a parameter grid, "
               "emitting CSV");
  sweep->add_option("--sweep", sweep_var,
                    "sweep variable: alpha, overlap-ratio or users");
  sweep->add_option("--from", sweep_from, "first sweep value");
  sweep->add_option("--to", sweep_to, "last sweep value");
  sweep->add_option("--step", sweep_step, "sweep increment");
  sweep->add_option("--out", sweep_out, "CSV output file (default: stdout)");
  sweep_flags.attach(*sweep);

  ConfigFlags validate_flags;
  CLI::App* validate = app.add_subcommand(
      "validate", "run the built-in cross-module consistency checks");
  validate_flags.attach(*validate);

  try {
    app.parse(argc, argv);

    if (evaluate->parsed()) {
      return cmd_evaluate(eval_flags, eval_placement);
    }
    if (simulate->parsed()) {
      return cmd_simulate(sim_flags, sim_placement);
    }
    if (optimize->parsed()) {
      return cmd_optimize(opt_flags, optimize_out);
    }
    if (sweep->parsed()) {
      std::vector<std::pair<std::string, std::string>> extras;
      if (sweep->get_option("--sweep")->count() > 0) {
        extras.emplace_back("sweep", sweep_var);
      }
      if (sweep->get_option("--from")->count() > 0) {
        extras.emplace_back("from", sweep_from);
      }
      if (sweep->get_option("--to")->count() > 0) {
        extras.emplace_back("to", sweep_to);
      }
      if (sweep->get_option("--step")->count() > 0) {
        extras.emplace_back("step", sweep_step);
      }
      return cmd_sweep(sweep_flags, extras, sweep_out);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_flags);
    }
    return kExitUsage;
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  }
}
