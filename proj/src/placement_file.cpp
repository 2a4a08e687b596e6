#include "mahc/placement_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
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

int parse_int(const std::string& token, int line_number) {
  const std::string clean = trim(token);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(clean.data(), clean.data() + clean.size(), value);
  if (ec != std::errc() || ptr != clean.data() + clean.size()) {
    throw PlacementParseError("line " + std::to_string(line_number) +
                              ": '" + clean + "' is not an integer");
  }
  return value;
}

std::vector<int> parse_int_list(const std::string& text, int line_number) {
  std::vector<int> values;
  std::string token;
  std::istringstream stream(text);  // an empty value yields an empty set
  while (std::getline(stream, token, ',')) {
    values.push_back(parse_int(token, line_number));
  }
  // Listing order carries no meaning; canonical placements are sorted.
  // Duplicates are kept for validate_placement to report.
  std::sort(values.begin(), values.end());
  return values;
}

void join_ints(std::ostream& output, const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) output << ',';
    output << values[i];
  }
}

}  // namespace

Placement parse_placement(std::istream& input) {
  Placement placement;
  std::map<std::string, int> seen;
  bool have_share = false;

  std::string line;
  int line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    const std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto colon = content.find(':');
    if (colon == std::string::npos) {
      throw PlacementParseError("line " + std::to_string(line_number) +
                                ": expected 'key: value'");
    }
    const std::string key = trim(content.substr(0, colon));
    const std::string value = trim(content.substr(colon + 1));
    if (++seen[key] > 1) {
      throw PlacementParseError("line " + std::to_string(line_number) +
                                ": duplicate key '" + key + "'");
    }
    if (key == "coded_share") {
      placement.coded_share = parse_int(value, line_number);
      have_share = true;
    } else if (key == "coded") {
      placement.coded = parse_int_list(value, line_number);
    } else if (key == "uncoded1") {
      placement.uncoded1 = parse_int_list(value, line_number);
    } else if (key == "uncoded2") {
      placement.uncoded2 = parse_int_list(value, line_number);
    } else {
      throw PlacementParseError(
          "line " + std::to_string(line_number) + ": unknown key '" + key +
          "' (expected coded_share, coded, uncoded1 or uncoded2)");
    }
  }
  if (!have_share && !placement.coded.empty()) {
    throw PlacementParseError(
        "a coded set requires an explicit coded_share line");
  }
  placement.cache_capacity =
      placement.coded_share + static_cast<int>(placement.uncoded1.size());
  return placement;
}

Placement parse_placement_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw PlacementParseError("cannot open placement file '" + path + "'");
  }
  return parse_placement(file);
}

void write_placement(std::ostream& output, const Placement& placement) {
  output << "coded_share: " << placement.coded_share << '\n';
  output << "coded: ";
  join_ints(output, placement.coded);
  output << '\n';
  output << "uncoded1: ";
  join_ints(output, placement.uncoded1);
  output << '\n';
  output << "uncoded2: ";
  join_ints(output, placement.uncoded2);
  output << '\n';
}

}  // namespace mahc
