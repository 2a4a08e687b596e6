#include "mahc/placement.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mahc {

namespace {

bool sorted_contains(const std::vector<int>& set, int content) {
  return std::binary_search(set.begin(), set.end(), content);
}

// Returns a violation message for a malformed index set, or empty if fine.
std::string check_index_set(const std::vector<int>& set, const char* label,
                            int content_count) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 1 || set[i] > content_count) {
      return std::string(label) + " contains out-of-range content index " +
             std::to_string(set[i]);
    }
    if (i > 0 && set[i] == set[i - 1]) {
      return std::string(label) + " contains duplicate content index " +
             std::to_string(set[i]);
    }
    if (i > 0 && set[i] < set[i - 1]) {
      return std::string(label) + " must be sorted ascending";
    }
  }
  return {};
}

bool sets_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return false;
}

}  // namespace

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Mahc:
      return "mahc";
    case Scheme::Macc:
      return "macc";
    case Scheme::Uncoded:
      return "uncoded";
  }
  throw std::logic_error("unhandled scheme");
}

Scheme parse_scheme(const std::string& name) {
  std::string lower;
  lower.reserve(name.size());
  for (char ch : name) {
    lower.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(ch))));
  }
  if (lower == "mahc") return Scheme::Mahc;
  if (lower == "macc") return Scheme::Macc;
  if (lower == "uncoded") return Scheme::Uncoded;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected mahc, macc or uncoded)");
}

bool Placement::contains_coded(int content) const {
  return sorted_contains(coded, content);
}

bool Placement::contains_uncoded(int content, int cell) const {
  if (cell == 1) return sorted_contains(uncoded1, content);
  if (cell == 2) return sorted_contains(uncoded2, content);
  throw std::invalid_argument("cell index must be 1 or 2");
}

double coded_load_factor(const Placement& placement) {
  if (placement.coded.empty()) {
    throw std::invalid_argument("load factor undefined without coded contents");
  }
  return 2.0 * placement.coded_share / placement.coded_count();
}

double coded_step_cost(const Placement& placement, double content_size_bits) {
  if (placement.coded_count() <= placement.coded_share) {
    return 0.0;
  }
  const double t = coded_load_factor(placement);
  return content_size_bits * (2.0 - t) / (t + 1.0);
}

ValidationResult validate_placement(const Placement& placement,
                                    const ContentLibrary& library) {
  const int n = library.content_count();
  const int m = placement.cache_capacity;
  const int mp = placement.coded_share;
  const int np = placement.coded_count();

  if (m < 0 || m > n) {
    return {false, "cache capacity M must satisfy 0 <= M <= N, got M = " +
                       std::to_string(m)};
  }
  if (mp < 0 || mp > m) {
    return {false, "coded share M_p must satisfy 0 <= M_p <= M, got M_p = " +
                       std::to_string(mp)};
  }
  for (const auto& [set, label] :
       {std::pair{&placement.coded, "coded set"},
        std::pair{&placement.uncoded1, "uncoded set 1"},
        std::pair{&placement.uncoded2, "uncoded set 2"}}) {
    if (auto msg = check_index_set(*set, label, n); !msg.empty()) {
      return {false, msg};
    }
  }
  if (static_cast<int>(placement.uncoded1.size()) != m - mp) {
    return {false, "uncoded set 1 must hold M - M_p = " +
                       std::to_string(m - mp) + " contents, got " +
                       std::to_string(placement.uncoded1.size())};
  }
  if (static_cast<int>(placement.uncoded2.size()) != m - mp) {
    return {false, "uncoded set 2 must hold M - M_p = " +
                       std::to_string(m - mp) + " contents, got " +
                       std::to_string(placement.uncoded2.size())};
  }
  if (sets_intersect(placement.coded, placement.uncoded1) ||
      sets_intersect(placement.coded, placement.uncoded2)) {
    return {false, "coded set must be disjoint from both uncoded sets"};
  }
  if (mp == 0) {
    if (np != 0) {
      return {false, "a placement without coded memory (M_p = 0) cannot "
                     "select coded contents"};
    }
  } else if (np <= mp) {
    return {false, "coded set size N_p must exceed the coded share M_p (" +
                       std::to_string(np) + " <= " + std::to_string(mp) + ")"};
  }
  return {true, {}};
}

bool satisfies_scheme(const Placement& placement, Scheme scheme) {
  switch (scheme) {
    case Scheme::Mahc:
      return true;
    case Scheme::Macc:
      return placement.coded_share == placement.cache_capacity;
    case Scheme::Uncoded:
      return placement.coded_share == 0 && placement.coded.empty();
  }
  throw std::logic_error("unhandled scheme");
}

}  // namespace mahc
