#include "mahc/placement.hpp"

#include <stdexcept>

#include "doctest.h"

#include "mahc/library.hpp"

namespace {

mahc::Placement reference_placement() {
  mahc::Placement placement;
  placement.cache_capacity = 3;
  placement.coded_share = 1;
  placement.coded = {3, 4, 5, 6};
  placement.uncoded1 = {1, 2};
  placement.uncoded2 = {1, 7};
  return placement;
}

const mahc::ContentLibrary& ten_contents() {
  static const mahc::ContentLibrary library(mahc::zipf_popularity(10, 1.2));
  return library;
}

}  // namespace

TEST_CASE("scheme names round-trip") {
  for (mahc::Scheme scheme :
       {mahc::Scheme::Mahc, mahc::Scheme::Macc, mahc::Scheme::Uncoded}) {
    CHECK(mahc::parse_scheme(mahc::scheme_name(scheme)) == scheme);
  }
  CHECK(mahc::parse_scheme("MAHC") == mahc::Scheme::Mahc);
  CHECK_THROWS_AS(mahc::parse_scheme("hybrid"), std::invalid_argument);
}

TEST_CASE("membership helpers") {
  const auto placement = reference_placement();
  CHECK(placement.coded_count() == 4);
  CHECK(placement.contains_coded(4));
  CHECK_FALSE(placement.contains_coded(1));
  CHECK(placement.contains_uncoded(2, 1));
  CHECK_FALSE(placement.contains_uncoded(2, 2));
  CHECK(placement.contains_uncoded(7, 2));
  CHECK_THROWS_AS(placement.contains_uncoded(1, 3), std::invalid_argument);
}

TEST_CASE("coded load factor and step cost") {
  mahc::Placement placement;
  placement.cache_capacity = 2;
  placement.coded_share = 1;
  placement.coded = {1, 2};
  CHECK(mahc::coded_load_factor(placement) == 1.0);  // T = 2*1/2
  CHECK(mahc::coded_step_cost(placement, 1.0) == 0.5);
  CHECK(mahc::coded_step_cost(placement, 4.0) == 2.0);

  placement.coded = {1, 2, 3};  // fractional T = 2/3 is applied as-is
  CHECK(mahc::coded_load_factor(placement) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(mahc::coded_step_cost(placement, 1.0) ==
        doctest::Approx((2.0 - 2.0 / 3.0) / (2.0 / 3.0 + 1.0))
            .epsilon(1e-15));

  placement.coded_share = 2;
  placement.coded = {1, 2};  // N_p <= M_p: nothing left to multicast
  CHECK(mahc::coded_step_cost(placement, 1.0) == 0.0);

  placement.coded = {};
  CHECK_THROWS_AS(mahc::coded_load_factor(placement), std::invalid_argument);
}

TEST_CASE("placement validation accepts the reference shape") {
  const auto verdict =
      mahc::validate_placement(reference_placement(), ten_contents());
  CHECK(verdict.ok);
  CHECK(verdict.violation.empty());
}

TEST_CASE("placement validation rejects each violated constraint") {
  const auto& library = ten_contents();
  auto placement = reference_placement();

  SUBCASE("coded set size must exceed the coded share") {
    placement.coded = {3, 4};
    placement.coded_share = 2;
    placement.uncoded1 = {1};
    placement.uncoded2 = {2};
    const auto verdict = mahc::validate_placement(placement, library);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.violation.find("N_p") != std::string::npos);
  }
  SUBCASE("coded and uncoded sets must be disjoint") {
    placement.uncoded1 = {1, 3};
    const auto verdict = mahc::validate_placement(placement, library);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.violation.find("disjoint") != std::string::npos);
  }
  SUBCASE("no coded contents without coded memory") {
    placement.coded_share = 0;
    placement.uncoded1 = {1, 2, 7};
    placement.uncoded2 = {1, 2, 8};
    CHECK_FALSE(mahc::validate_placement(placement, library).ok);
  }
  SUBCASE("uncoded set sizes must equal M - M_p") {
    placement.uncoded1 = {1};
    CHECK_FALSE(mahc::validate_placement(placement, library).ok);
  }
  SUBCASE("indices must be in range") {
    placement.uncoded2 = {1, 11};
    CHECK_FALSE(mahc::validate_placement(placement, library).ok);
  }
  SUBCASE("duplicates are reported") {
    placement.coded = {3, 3, 4, 5};
    const auto verdict = mahc::validate_placement(placement, library);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.violation.find("duplicate") != std::string::npos);
  }
  SUBCASE("capacity must fit the library") {
    placement.cache_capacity = 11;
    CHECK_FALSE(mahc::validate_placement(placement, library).ok);
  }
  SUBCASE("coded share cannot exceed capacity") {
    placement.coded_share = 4;
    CHECK_FALSE(mahc::validate_placement(placement, library).ok);
  }
}

TEST_CASE("pure uncoded and empty placements are valid") {
  mahc::Placement placement;  // M = 0, nothing cached
  CHECK(mahc::validate_placement(placement, ten_contents()).ok);

  placement.cache_capacity = 2;
  placement.uncoded1 = {1, 2};
  placement.uncoded2 = {1, 3};
  CHECK(mahc::validate_placement(placement, ten_contents()).ok);
}

TEST_CASE("scheme constraint presets") {
  auto placement = reference_placement();
  CHECK(mahc::satisfies_scheme(placement, mahc::Scheme::Mahc));
  CHECK_FALSE(mahc::satisfies_scheme(placement, mahc::Scheme::Macc));
  CHECK_FALSE(mahc::satisfies_scheme(placement, mahc::Scheme::Uncoded));

  placement.coded_share = placement.cache_capacity;
  CHECK(mahc::satisfies_scheme(placement, mahc::Scheme::Macc));

  mahc::Placement uncoded;
  uncoded.cache_capacity = 2;
  uncoded.uncoded1 = {1, 2};
  uncoded.uncoded2 = {1, 2};
  CHECK(mahc::satisfies_scheme(uncoded, mahc::Scheme::Uncoded));
  CHECK(mahc::satisfies_scheme(uncoded, mahc::Scheme::Mahc));
}
