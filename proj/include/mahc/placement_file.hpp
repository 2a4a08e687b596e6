#pragma once

#include <iosfwd>
#include <string>

#include "mahc/placement.hpp"

namespace mahc {

/// Thrown on malformed placement files (unknown key, unparsable integer,
/// duplicate key). Semantic problems (overlapping sets, bad sizes) are the
/// business of validate_placement, not the parser.
class PlacementParseError : public std::runtime_error {
 public:
  explicit PlacementParseError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Line-oriented placement format:
///   coded_share: m
///   coded: i,j,k
///   uncoded1: i,j
///   uncoded2: i,j
/// Blank lines and lines starting with '#' are ignored. Keys may appear in
/// any order; omitted list keys mean empty sets. The placement's
/// cache_capacity is inferred as coded_share + |uncoded1| (and must match
/// |uncoded2|; that check is left to validate_placement).
Placement parse_placement(std::istream& input);
Placement parse_placement_file(const std::string& path);

/// Writes the same format back (used by `optimize --out`).
void write_placement(std::ostream& output, const Placement& placement);

}  // namespace mahc
