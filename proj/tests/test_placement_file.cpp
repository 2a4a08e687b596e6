#include "mahc/placement_file.hpp"

#include <sstream>

#include "doctest.h"

#include "mahc/library.hpp"

TEST_CASE("placement files parse keys in any order with comments") {
  std::istringstream input(
      "# optimal placement\n"
      "uncoded2: 1\n"
      "\n"
      "coded: 2,3,4,5\n"
      "coded_share: 2\n"
      "uncoded1: 1\n");
  const auto placement = mahc::parse_placement(input);
  CHECK(placement.coded_share == 2);
  CHECK(placement.cache_capacity == 3);  // coded_share + |uncoded1|
  CHECK(placement.coded == std::vector<int>{2, 3, 4, 5});
  CHECK(placement.uncoded1 == std::vector<int>{1});
  CHECK(placement.uncoded2 == std::vector<int>{1});
}

TEST_CASE("list order is normalized, duplicates are preserved") {
  std::istringstream input(
      "coded_share: 1\n"
      "coded: 5,3,4\n"
      "uncoded1: 2,2\n"
      "uncoded2: 1,6\n");
  const auto placement = mahc::parse_placement(input);
  CHECK(placement.coded == std::vector<int>{3, 4, 5});
  CHECK(placement.uncoded1 == std::vector<int>{2, 2});  // for validation
  const mahc::ContentLibrary library(mahc::zipf_popularity(8, 1.0));
  CHECK_FALSE(mahc::validate_placement(placement, library).ok);
}

TEST_CASE("empty values and omitted keys mean empty sets") {
  std::istringstream input(
      "coded_share: 0\n"
      "coded: \n"
      "uncoded1: 1,2\n"
      "uncoded2: 1,3\n");
  const auto placement = mahc::parse_placement(input);
  CHECK(placement.coded.empty());
  CHECK(placement.cache_capacity == 2);

  std::istringstream minimal("uncoded1: 4\nuncoded2: 4\n");
  const auto tiny = mahc::parse_placement(minimal);
  CHECK(tiny.coded_share == 0);
  CHECK(tiny.cache_capacity == 1);
}

TEST_CASE("malformed placement files raise parse errors") {
  const auto parse = [](const char* text) {
    std::istringstream input(text);
    return mahc::parse_placement(input);
  };
  CHECK_THROWS_AS(parse("coded_share: two\n"), mahc::PlacementParseError);
  CHECK_THROWS_AS(parse("coded_share 2\n"), mahc::PlacementParseError);
  CHECK_THROWS_AS(parse("mystery: 1\n"), mahc::PlacementParseError);
  CHECK_THROWS_AS(parse("uncoded1: 1\nuncoded1: 2\n"),
                  mahc::PlacementParseError);
  CHECK_THROWS_AS(parse("coded: 1,x\n"), mahc::PlacementParseError);
  CHECK_THROWS_AS(parse("coded: 1,2\n"), mahc::PlacementParseError);
  CHECK_THROWS_AS(mahc::parse_placement_file("/nonexistent/path.placement"),
                  mahc::PlacementParseError);
}

TEST_CASE("write/parse round trip") {
  mahc::Placement placement;
  placement.cache_capacity = 3;
  placement.coded_share = 2;
  placement.coded = {2, 3, 4, 5};
  placement.uncoded1 = {1};
  placement.uncoded2 = {6};

  std::ostringstream output;
  mahc::write_placement(output, placement);
  std::istringstream input(output.str());
  const auto parsed = mahc::parse_placement(input);
  CHECK(parsed.cache_capacity == placement.cache_capacity);
  CHECK(parsed.coded_share == placement.coded_share);
  CHECK(parsed.coded == placement.coded);
  CHECK(parsed.uncoded1 == placement.uncoded1);
  CHECK(parsed.uncoded2 == placement.uncoded2);
}
