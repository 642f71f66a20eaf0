#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secnc/netgraph.hpp"

namespace secnc::regions {

using Rat = mpq_class;

/// One half-space sum_{i in subset} R_i <= bound. Subsets are bitmasks over
/// the m rate coordinates.
struct Constraint {
  std::uint32_t subset;
  Rat bound;
};

/// Intersection of the listed half-spaces with the nonnegative orthant.
struct RateRegion {
  int m = 0;
  std::vector<Constraint> constraints;  // ordered by subset mask
};

/// Per-part cut values of a separable partition candidate; negative entries
/// certify that no partition exists.
struct StarProfile {
  int m = 0;
  std::vector<long long> values;  // indexed by mask - 1

  long long at(std::uint32_t mask) const { return values.at(mask - 1); }
};

RateRegion secure_outer_bound(const net::MinCutProfile& profile, int k);
RateRegion unsecure_region(const net::MinCutProfile& profile);

/// Inverts the subset-sum system M_A = sum_{J : J∩A != empty} M*_J by
/// recursing over subsets smallest first. Exact; the inverse of
/// star_to_profile.
StarProfile star_mincuts(const net::MinCutProfile& profile);
net::MinCutProfile star_to_profile(const StarProfile& star);
bool is_separable_profile(const StarProfile& star);

/// Scales every bound by max(0, 1 - k/min_single_cut). Throws on a zero cut.
RateRegion two_phase_region(const RateRegion& unsecure, int k, int min_single_cut);

/// Vertices of the polytope, m <= 3 only. Each vertex satisfies all
/// constraints with at least m of them (or axis planes) tight.
std::vector<std::vector<Rat>> corner_points(const RateRegion& region);

bool satisfies(const RateRegion& region, const std::vector<Rat>& point);
/// Polytope containment inner ⊆ outer via corner enumeration (m <= 3).
bool contains(const RateRegion& outer, const RateRegion& inner);
/// Largest R with (R, R, ..., R) in the region.
Rat max_symmetric_rate(const RateRegion& region);

enum class ButterflyVariant { bf1, single_source, single_dest, bf2 };
std::optional<ButterflyVariant> butterfly_variant_from_string(const std::string& s);

struct ButterflyRegions {
  RateRegion unsecure;
  std::optional<RateRegion> secure;  // nullopt: secure communication impossible
};

/// Closed-form two-flow regions of the four butterfly-derived topologies with
/// arbitrary edge capacities c[0..6] (= links 1..7).
ButterflyRegions butterfly_regions(const std::array<Rat, 7>& c, ButterflyVariant v);

std::string region_json(const RateRegion& region);
std::string corners_csv(const RateRegion& region);
std::string subset_to_string(std::uint32_t mask);

}  // namespace secnc::regions
