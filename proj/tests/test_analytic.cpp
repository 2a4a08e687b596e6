#include "mahc/analytic.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "mahc/validation.hpp"

using mahc::ContentLibrary;
using mahc::Placement;
using mahc::TwoCellTopology;

namespace {

Placement coded_only(int coded_share, std::vector<int> coded) {
  Placement placement;
  placement.cache_capacity = coded_share;
  placement.coded_share = coded_share;
  placement.coded = std::move(coded);
  return placement;
}

}  // namespace

TEST_CASE("next distinct probability follows the three-factor form") {
  const ContentLibrary library({0.25, 0.25, 0.25, 0.25});
  const TwoCellTopology disjoint(1.0, 1.0, 2.5, 4);  // v_1 = v_2 = 0.5

  const auto placement = coded_only(1, {1, 2});
  // coded mass 0.5, v = 0.5: q_1 = 0.25, q_2 = halved, q_3 = 0.
  CHECK(mahc::next_distinct_probability(disjoint, library, placement, 1, 1) ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(mahc::next_distinct_probability(disjoint, library, placement, 1, 2) ==
        doctest::Approx(0.125).epsilon(1e-15));
  CHECK(mahc::next_distinct_probability(disjoint, library, placement, 1, 3) ==
        0.0);
  CHECK(mahc::next_distinct_probability(disjoint, library, placement, 2, 1) ==
        doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("single-user distribution is a bernoulli draw") {
  const ContentLibrary library({0.25, 0.25, 0.25, 0.25});
  const TwoCellTopology topology(1.0, 1.0, 2.5, 1);
  const auto placement = coded_only(1, {1, 2});
  const auto dist =
      mahc::distinct_coded_distribution(topology, library, placement, 1);
  REQUIRE(dist.size() == 2);
  const double q1 =
      mahc::next_distinct_probability(topology, library, placement, 1, 1);
  CHECK(dist[1] == doctest::Approx(q1).epsilon(1e-15));
  CHECK(dist[0] == doctest::Approx(1.0 - q1).epsilon(1e-15));
}

TEST_CASE("recursion matches brute-force enumeration when coded "
          "popularities are uniform") {
  // Overall popularity may be skewed as long as the coded subset is uniform.
  const ContentLibrary library({0.5, 0.25, 0.25});
  const double d = mahc::distance_for_overlap_ratio(1.0, 1.0, 0.4);
  const TwoCellTopology topology(1.0, 1.0, d, 3);
  const auto placement = coded_only(1, {2, 3});
  for (int cell : {1, 2}) {
    const auto model = mahc::distinct_coded_tail_probabilities(
        topology, library, placement, cell);
    const auto oracle =
        mahc::enumeration_distinct_tail(topology, library, placement, cell);
    REQUIRE(model.size() == oracle.size());
    for (std::size_t i = 0; i < model.size(); ++i) {
      CHECK(std::abs(model[i] - oracle[i]) <= 1e-12);
    }
  }
}

TEST_CASE("recursion is only approximate for skewed coded popularities") {
  const ContentLibrary library(mahc::zipf_popularity(3, 1.2));
  const TwoCellTopology topology(1.0, 1.0, 0.8, 3);
  const auto placement = coded_only(2, {1, 2, 3});
  double worst = 0.0;
  const auto model =
      mahc::distinct_coded_tail_probabilities(topology, library, placement, 1);
  const auto oracle =
      mahc::enumeration_distinct_tail(topology, library, placement, 1);
  for (std::size_t i = 0; i < model.size(); ++i) {
    worst = std::max(worst, std::abs(model[i] - oracle[i]));
  }
  CHECK(worst > 1e-9);  // genuinely an approximation...
  CHECK(worst < 0.05);  // ...but a close one
}

TEST_CASE("distribution mass and tail shape") {
  const ContentLibrary library(mahc::zipf_popularity(6, 1.2));
  const auto placement = coded_only(2, {1, 2, 3});
  for (int z : {1, 2, 5, 9, 16}) {
    const TwoCellTopology topology(1.0, 1.0, 0.8, z);
    const auto dist =
        mahc::distinct_coded_distribution(topology, library, placement, 1);
    double total = 0.0;
    for (double p : dist) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      total += p;
    }
    CHECK(std::abs(total - 1.0) <= 1e-9);
    // No more distinct contents than the coded set holds.
    for (std::size_t j = 4; j < dist.size(); ++j) CHECK(dist[j] == 0.0);

    const auto tail = mahc::distinct_coded_tail_probabilities(
        topology, library, placement, 1);
    CHECK(tail[0] == 1.0);
    for (std::size_t i = 1; i < tail.size(); ++i) {
      CHECK(tail[i] <= tail[i - 1] + 1e-15);
      CHECK(tail[i] >= 0.0);
    }
  }
}

TEST_CASE("step idle probability") {
  const std::vector<double> tail1 = {1.0, 0.3};
  const std::vector<double> tail2 = {1.0, 0.5};
  CHECK(mahc::step_idle_probability(tail1, tail2, 1) ==
        doctest::Approx(0.35).epsilon(1e-15));
  CHECK(mahc::step_idle_probability(tail1, tail2, 2) == 1.0);  // beyond Z
  CHECK_THROWS_AS(mahc::step_idle_probability(tail1, tail2, 0),
                  std::invalid_argument);

  // Full overlap: no exclusive users, every step idle.
  const ContentLibrary library({0.5, 0.5});
  const TwoCellTopology coincident(1.0, 1.0, 0.0, 5);
  const auto placement = coded_only(1, {1, 2});
  const auto tail = mahc::distinct_coded_tail_probabilities(
      coincident, library, placement, 1);
  for (std::size_t i = 1; i < tail.size(); ++i) CHECK(tail[i] == 0.0);
}

TEST_CASE("coded load: hand-computed two-user disjoint case") {
  // Uniform two-content library fully coded, T = 1, v = 1/2: every quantity
  // is dyadic, so the model value is exact.
  const ContentLibrary library({0.5, 0.5});
  const TwoCellTopology topology(1.0, 1.0, 2.5, 2);
  const auto placement = coded_only(1, {1, 2});
  const auto load = mahc::analytic_load(topology, library, placement);
  CHECK(load.coded == doctest::Approx(0.5859375).epsilon(1e-15));
  CHECK(load.uncoded == 0.0);
  CHECK(load.total() == doctest::Approx(0.5859375).epsilon(1e-15));
}

TEST_CASE("coded load vanishes when nothing is left to multicast") {
  const ContentLibrary library({0.25, 0.25, 0.25, 0.25});
  const TwoCellTopology topology(1.0, 1.0, 0.8, 6);

  // N_p <= M_p: both caches hold all coded contents whole.
  const auto saturated = coded_only(2, {1, 2});
  CHECK(mahc::analytic_load(topology, library, saturated).coded == 0.0);

  // Full overlap: no exclusive-area users exist.
  const TwoCellTopology coincident(1.0, 1.0, 0.0, 6);
  const auto hybrid = coded_only(1, {1, 2});
  CHECK(mahc::analytic_load(coincident, library, hybrid).coded == 0.0);
}

TEST_CASE("uncached load cases") {
  const TwoCellTopology topology(1.0, 1.0, 0.8, 4);

  SUBCASE("everything cached in both cells costs nothing") {
    const ContentLibrary library({0.5, 0.5});
    Placement placement;
    placement.cache_capacity = 2;
    placement.uncoded1 = {1, 2};
    placement.uncoded2 = {1, 2};
    const auto load = mahc::analytic_load(topology, library, placement);
    CHECK(load.total() == 0.0);
  }
  SUBCASE("one content cached nowhere") {
    const ContentLibrary library(mahc::zipf_popularity(2, 1.0));  // 2/3, 1/3
    Placement placement;
    placement.cache_capacity = 1;
    placement.uncoded1 = {1};
    placement.uncoded2 = {1};
    const auto load = mahc::analytic_load(topology, library, placement);
    const double expected = 1.0 - std::pow(2.0 / 3.0, 4);  // only content 2
    CHECK(load.uncoded == doctest::Approx(expected).epsilon(1e-14));
    CHECK(load.coded == 0.0);
  }
  SUBCASE("single-cell caching counts the exclusive miss area") {
    const ContentLibrary library({0.2, 0.2, 0.2, 0.2, 0.2});
    Placement placement;
    placement.cache_capacity = 1;
    placement.uncoded1 = {1};
    placement.uncoded2 = {2};
    const TwoCellTopology wide(1.0, 1.0, 0.8, 10);
    const auto load = mahc::analytic_load(wide, library, placement);

    const double union_area =
        2.0 * std::numbers::pi - mahc_test::unit_lens_area(0.8);
    const double covered = std::numbers::pi / union_area;
    const double cell_term =
        1.0 - std::pow(1.0 - 0.2 * (1.0 - covered), 10);
    const double missing_term = 1.0 - std::pow(0.8, 10);
    CHECK(load.uncoded ==
          doctest::Approx(2.0 * cell_term + 3.0 * missing_term)
              .epsilon(1e-12));
  }
}

TEST_CASE("total load limits") {
  const TwoCellTopology topology(1.0, 1.0, 0.8, 7);
  const ContentLibrary library(mahc::zipf_popularity(5, 1.2));

  SUBCASE("caching the whole library uncoded in both cells") {
    Placement placement;
    placement.cache_capacity = 5;
    placement.uncoded1 = {1, 2, 3, 4, 5};
    placement.uncoded2 = {1, 2, 3, 4, 5};
    CHECK(mahc::analytic_load(topology, library, placement).total() == 0.0);
  }
  SUBCASE("caching nothing broadcasts every requested content") {
    const Placement placement;
    double expected = 0.0;
    for (int n = 1; n <= 5; ++n) {
      expected += 1.0 - std::pow(1.0 - library.popularity(n), 7);
    }
    const auto load = mahc::analytic_load(topology, library, placement);
    CHECK(load.coded == 0.0);
    CHECK(load.uncoded == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("load scales linearly with the content size") {
  const TwoCellTopology topology(1.0, 1.0, 0.8, 10);
  Placement placement;
  placement.cache_capacity = 3;
  placement.coded_share = 2;
  placement.coded = {2, 3, 4, 5};
  placement.uncoded1 = {1};
  placement.uncoded2 = {1};

  const auto base = mahc::analytic_load(
      topology, ContentLibrary(mahc::zipf_popularity(10, 1.2), 1.0),
      placement);
  const auto scaled = mahc::analytic_load(
      topology, ContentLibrary(mahc::zipf_popularity(10, 1.2), 7.5),
      placement);
  CHECK(scaled.coded == doctest::Approx(7.5 * base.coded).epsilon(1e-12));
  CHECK(scaled.uncoded == doctest::Approx(7.5 * base.uncoded).epsilon(1e-12));
}

TEST_CASE("uncoded-set swap symmetry under equal radii") {
  const TwoCellTopology topology(1.0, 1.0, 0.8, 10);
  const ContentLibrary library(mahc::zipf_popularity(10, 1.2));
  Placement placement;
  placement.cache_capacity = 3;
  placement.coded_share = 1;
  placement.coded = {4, 5};
  placement.uncoded1 = {1, 2};
  placement.uncoded2 = {1, 3};

  Placement swapped = placement;
  std::swap(swapped.uncoded1, swapped.uncoded2);
  const auto load = mahc::analytic_load(topology, library, placement);
  const auto mirrored = mahc::analytic_load(topology, library, swapped);
  CHECK(std::abs(load.total() - mirrored.total()) <= 1e-12);
  CHECK(std::abs(load.coded - mirrored.coded) <= 1e-12);
}

TEST_CASE("conventional coded-caching reference rate") {
  CHECK(mahc::conventional_coded_load(2, 10, 10.0) == 0.0);
  CHECK(mahc::conventional_coded_load(2, 10, 0.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(mahc::conventional_coded_load(2, 10, 5.0) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mahc::conventional_coded_load(2, 10, 5.0, 3.0) ==
        doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(mahc::conventional_coded_load(2, 10, 11.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(mahc::conventional_coded_load(0, 10, 1.0),
                  std::invalid_argument);
}
