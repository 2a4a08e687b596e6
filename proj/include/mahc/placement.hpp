#pragma once

#include <string>
#include <vector>

#include "mahc/library.hpp"

namespace mahc {

/// Caching schemes compared by the experiments.
///   Mahc    — hybrid: each cache splits capacity into a coded share M_p and
///             an uncoded remainder, all knobs free.
///   Macc    — pure coded baseline: all cache memory is coded (M_p = M).
///   Uncoded — conventional baseline: whole contents only (M_p = 0).
enum class Scheme { Mahc, Macc, Uncoded };

const char* scheme_name(Scheme scheme);

/// Parses "mahc", "macc" or "uncoded" (case-insensitive).
/// Throws std::invalid_argument on anything else.
Scheme parse_scheme(const std::string& name);

/// A hybrid coded/uncoded cache placement for the two-cell network.
///
/// Each cache holds `cache_capacity` (M) contents' worth of memory, of which
/// `coded_share` (M_p) is dedicated to the coded scheme. `coded` lists the
/// contents cached as coded fragments at both cells (N_p = coded.size());
/// `uncoded1`/`uncoded2` list the contents cached whole at each cell
/// (M - M_p each). All sets use canonical 1-based content indices, sorted
/// ascending.
struct Placement {
  int cache_capacity = 0;  // M
  int coded_share = 0;     // M_p
  std::vector<int> coded;
  std::vector<int> uncoded1;
  std::vector<int> uncoded2;

  int coded_count() const { return static_cast<int>(coded.size()); }  // N_p

  bool contains_coded(int content) const;
  bool contains_uncoded(int content, int cell) const;
};

/// The coded load factor T = 2*M_p/N_p. Requires a nonempty coded set.
double coded_load_factor(const Placement& placement);

/// Shared-link cost of one coded delivery step, F*(2-T)/(T+1) bits.
/// Zero when the placement has no coded part needing delivery (N_p <= M_p).
double coded_step_cost(const Placement& placement, double content_size_bits);

struct ValidationResult {
  bool ok = true;
  std::string violation;  // first violated constraint, empty when ok
};

/// Checks every Placement invariant against the library:
/// index ranges, sorted unique sets, set sizes, disjointness of coded and
/// uncoded sets, 0 <= M_p <= M <= N, and the coded-part constraint
/// (M_p = 0 => N_p = 0; M_p > 0 => M_p < N_p <= N). Reports the first
/// violation found; never repairs.
ValidationResult validate_placement(const Placement& placement,
                                    const ContentLibrary& library);

/// Whether the placement satisfies the scheme's constraint preset
/// (Macc: M_p = M; Uncoded: M_p = 0 and no coded set; Mahc: anything valid).
bool satisfies_scheme(const Placement& placement, Scheme scheme);

}  // namespace mahc
