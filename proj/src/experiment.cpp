#include "mahc/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mahc {

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

std::string normalize_key(const std::string& key) {
  std::string out = trim(key);
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

int parse_int_value(const std::string& key, const std::string& value) {
  int out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": '" + value + "' is not an integer");
  }
  return out;
}

std::uint64_t parse_uint64_value(const std::string& key,
                                 const std::string& value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": '" + value +
                      "' is not a nonnegative integer");
  }
  return out;
}

double parse_double_value(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + ": '" + value + "' is not a number");
  }
}

bool parse_bool_value(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key + ": '" + value + "' is not a boolean");
}

SweepSpec& sweep_slot(ExperimentConfig& config) {
  if (!config.sweep) config.sweep.emplace();
  return *config.sweep;
}

std::vector<double> load_popularity_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ConfigError("cannot open popularity file '" + path + "'");
  }
  std::vector<double> values;
  double v = 0.0;
  while (file >> v) values.push_back(v);
  if (!file.eof()) {
    throw ConfigError("popularity file '" + path +
                      "' contains a non-numeric token");
  }
  if (values.empty()) {
    throw ConfigError("popularity file '" + path + "' is empty");
  }
  return values;
}

}  // namespace

std::vector<double> SweepSpec::points() const {
  if (variable != "alpha" && variable != "overlap_ratio" &&
      variable != "users") {
    throw ConfigError("unknown sweep variable '" + variable +
                      "' (expected alpha, overlap-ratio or users)");
  }
  if (!(step > 0.0)) {
    throw ConfigError("sweep step must be positive");
  }
  if (to < from) {
    throw ConfigError("sweep range is empty (to < from)");
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    double x = from + k * step;
    if (x > to + step / 2.0) break;
    grid.push_back(std::min(x, to));  // snap the last point onto the bound
  }
  return grid;
}

ContentLibrary ExperimentConfig::make_library() const {
  if (!popularity_file.empty()) {
    return ContentLibrary(load_popularity_file(popularity_file),
                          content_size_bits);
  }
  return ContentLibrary(zipf_popularity(content_count, alpha),
                        content_size_bits);
}

TwoCellTopology ExperimentConfig::make_topology() const {
  const double d = overlap_ratio
                       ? distance_for_overlap_ratio(radius, radius,
                                                    *overlap_ratio)
                       : distance;
  return TwoCellTopology(radius, radius, d, user_count);
}

OptimizationResult ExperimentConfig::run_optimizer(
    const ContentLibrary& library, const TwoCellTopology& topology,
    Scheme scheme) const {
  if (use_heuristic) {
    return optimize_heuristic(library, topology, scheme, cache_capacity,
                              heuristic_slack);
  }
  return optimize(library, topology, scheme, cache_capacity);
}

std::vector<Scheme> parse_scheme_list(const std::string& text) {
  std::vector<Scheme> schemes;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    try {
      schemes.push_back(parse_scheme(trim(token)));
    } catch (const std::invalid_argument& error) {
      throw ConfigError(error.what());
    }
  }
  if (schemes.empty()) {
    throw ConfigError("scheme list is empty");
  }
  return schemes;
}

void apply_config_key(ExperimentConfig& config, const std::string& key,
                      const std::string& value) {
  const std::string name = normalize_key(key);
  if (name == "contents") {
    config.content_count = parse_int_value(name, value);
  } else if (name == "capacity") {
    config.cache_capacity = parse_int_value(name, value);
  } else if (name == "alpha") {
    config.alpha = parse_double_value(name, value);
  } else if (name == "popularity_file") {
    config.popularity_file = value;
  } else if (name == "radius") {
    config.radius = parse_double_value(name, value);
  } else if (name == "distance") {
    config.distance = parse_double_value(name, value);
    config.overlap_ratio.reset();  // last geometry key wins
  } else if (name == "overlap_ratio") {
    config.overlap_ratio = parse_double_value(name, value);
  } else if (name == "users") {
    config.user_count = parse_int_value(name, value);
  } else if (name == "runs") {
    config.runs = parse_int_value(name, value);
  } else if (name == "seed") {
    config.seed = parse_uint64_value(name, value);
  } else if (name == "schemes") {
    config.schemes = parse_scheme_list(value);
  } else if (name == "sweep") {
    sweep_slot(config).variable = normalize_key(value);
  } else if (name == "from") {
    sweep_slot(config).from = parse_double_value(name, value);
  } else if (name == "to") {
    sweep_slot(config).to = parse_double_value(name, value);
  } else if (name == "step") {
    sweep_slot(config).step = parse_double_value(name, value);
  } else if (name == "heuristic_slack") {
    config.heuristic_slack = parse_int_value(name, value);
    config.use_heuristic = true;
  } else if (name == "exact") {
    config.use_heuristic = !parse_bool_value(name, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto equals = content.find('=');
    if (equals == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_number) +
                        ": expected 'key = value'");
    }
    apply_config_key(config, trim(content.substr(0, equals)),
                     trim(content.substr(equals + 1)));
  }
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config) {
  if (!config.sweep) {
    throw ConfigError("sweep requires a sweep variable (--sweep)");
  }
  const SweepSpec& spec = *config.sweep;
  const auto points = spec.points();
  if (spec.variable == "alpha" && !config.popularity_file.empty()) {
    throw ConfigError(
        "cannot sweep alpha when an explicit popularity file is set");
  }

  std::vector<SweepRow> rows;
  rows.reserve(points.size() * config.schemes.size());
  for (double point : points) {
    ExperimentConfig at_point = config;
    if (spec.variable == "alpha") {
      at_point.alpha = point;
    } else if (spec.variable == "overlap_ratio") {
      at_point.overlap_ratio = point;
    } else {
      const int users = static_cast<int>(std::lround(point));
      if (users < 1) {
        throw ConfigError("user counts in the sweep must be at least 1");
      }
      at_point.user_count = users;
    }
    const ContentLibrary library = at_point.make_library();
    const TwoCellTopology topology = at_point.make_topology();
    const double f = library.content_size_bits();

    for (Scheme scheme : config.schemes) {
      const OptimizationResult best =
          at_point.run_optimizer(library, topology, scheme);
      const TrialStatistics stats = run_trials(
          library, topology, best.best_placement, config.runs, config.seed);
      SweepRow row;
      row.sweep_var = spec.variable;
      row.sweep_value = point;
      row.scheme = scheme;
      row.coded_share = best.best_placement.coded_share;
      row.coded_count = best.best_placement.coded_count();
      row.r_analytic = best.best_load.total() / f;
      row.r1_analytic = best.best_load.coded / f;
      row.r2_analytic = best.best_load.uncoded / f;
      row.r_sim_mean = stats.mean_load / f;
      row.r_sim_ci_low = (stats.mean_load - stats.ci_halfwidth) / f;
      row.r_sim_ci_high = (stats.mean_load + stats.ci_halfwidth) / f;
      row.runs = stats.runs;
      row.seed = config.seed;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void write_csv(std::ostream& output, const std::vector<SweepRow>& rows) {
  output << "sweep_var,sweep_value,scheme,M_p,N_p,r_analytic,r1_analytic,"
            "r2_analytic,r_sim_mean,r_sim_ci_low,r_sim_ci_high,runs,seed\n";
  for (const SweepRow& row : rows) {
    output << row.sweep_var << ',' << format_double(row.sweep_value) << ','
           << scheme_name(row.scheme) << ',' << row.coded_share << ','
           << row.coded_count << ',' << format_double(row.r_analytic) << ','
           << format_double(row.r1_analytic) << ','
           << format_double(row.r2_analytic) << ','
           << format_double(row.r_sim_mean) << ','
           << format_double(row.r_sim_ci_low) << ','
           << format_double(row.r_sim_ci_high) << ',' << row.runs << ','
           << row.seed << '\n';
  }
}

}  // namespace mahc
