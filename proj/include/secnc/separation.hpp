#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "secnc/netgraph.hpp"
#include "secnc/regions.hpp"

namespace secnc::sep {

/// Raised when the partition machinery violates one of its own guarantees
/// (never expected on valid two-destination inputs).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Edge partition of a two-destination network into three parts realizing the
/// star cut triple: g1 reaches only D_1 (cut star1), g2 only D_2 (cut star2),
/// g3 both with all three cuts equal to star12. Edges on no selected path are
/// listed in `unused`.
struct Partition2 {
  std::vector<net::EdgeId> g1, g2, g3, unused;
  long long star1 = 0, star2 = 0, star12 = 0;
};

/// The two-destination edge-partition algorithm: super-sink flows, green/red
/// path coloring with the two-step recoloring loop, extraction of the
/// exclusively-green paths, then one recursion on the remainder. Output cut
/// values are re-verified with the min-cut engine before returning.
Partition2 separate_two_dest(const net::Network& net);

/// Nonnegativity of the inverted cut system; necessary for separability, and
/// for m = 2 sufficient. No partition is constructed here.
std::pair<bool, regions::StarProfile> check_separable(const net::MinCutProfile& profile);

/// Same nodes and roles, edges restricted to `edge_ids` (in that order).
/// parent_ids, when given, receives the original id of each kept edge.
net::Network induced_subnetwork(const net::Network& net,
                                const std::vector<net::EdgeId>& edge_ids,
                                std::vector<net::EdgeId>* parent_ids = nullptr);

/// Min-cut of the subgraph induced by an edge subset.
int subset_min_cut(const net::Network& net, const std::vector<net::EdgeId>& subset,
                   std::uint32_t mask);

}  // namespace secnc::sep
