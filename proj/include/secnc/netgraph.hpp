#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace secnc::net {

using NodeId = int;
using EdgeId = int;

struct Edge {
  NodeId tail;
  NodeId head;
  bool operator==(const Edge&) const = default;
};

/// Directed acyclic network with one source, m destinations and unit-capacity
/// edges. Edge ids are positions in `edges` and stay stable. Parallel edges
/// are allowed; a link of capacity c is modelled as c parallel edges.
struct Network {
  std::vector<std::string> node_names;
  std::vector<Edge> edges;
  NodeId source = 0;
  std::vector<NodeId> destinations;

  int node_count() const { return static_cast<int>(node_names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int dest_count() const { return static_cast<int>(destinations.size()); }

  NodeId add_node(const std::string& name);
  EdgeId add_edge(NodeId tail, NodeId head);
  std::optional<NodeId> find_node(const std::string& name) const;

  std::vector<EdgeId> in_edges(NodeId v) const;
  std::vector<EdgeId> out_edges(NodeId v) const;
  /// Edge ids in an order where every edge appears after all edges into its
  /// tail node.
  std::vector<EdgeId> topological_edge_order() const;
};

enum class ValidationError {
  CyclicGraph,
  SourceHasIncoming,
  DestinationHasOutgoing,
  DuplicateDestination,
  BadNodeRef,
};
const char* to_string(ValidationError e);

std::optional<ValidationError> validate(const Network& net);

/// Min-cut values M_A for every nonempty destination subset A, indexed by
/// bitmask - 1. Monotone and subadditive over subsets.
struct MinCutProfile {
  int m = 0;
  std::vector<int> values;

  int at(std::uint32_t mask) const { return values.at(mask - 1); }
  static MinCutProfile from_values(const std::vector<int>& v);
};

/// Value of a max flow from the source to a super-sink attached to the
/// destinations selected by `mask` (bit i = destination i).
int min_cut(const Network& net, std::uint32_t mask);
MinCutProfile mincut_profile(const Network& net);

/// `count` pairwise edge-disjoint paths from the source to destination
/// `dest_index`, each as an edge-id sequence. Tie-breaking is lowest edge id
/// first, so output is deterministic. Throws when count exceeds the min-cut.
std::vector<std::vector<EdgeId>> edge_disjoint_paths(const Network& net,
                                                     int dest_index, int count);

/// Reverses every edge and swaps roles: the destination selected by
/// `new_source_index` becomes the source and the old source becomes the only
/// destination. Other old destinations stay in the graph as plain nodes with
/// no incoming edges. Edge ids are preserved (tail/head swapped in place).
Network reverse(const Network& net, int new_source_index = 0);

// Line-oriented text format:
//   node <name>
//   edge <tail> <head>
//   source <name>
//   dest <name>
// `edge` registers unknown node names on first use; destination order is
// declaration order; `#` starts a comment.
Network parse_graph_text(std::istream& in);
Network parse_graph_file(const std::string& path);
std::string format_graph_text(const Network& net);

/// Integer-capacity max-flow instance used by the cut engine and by the
/// partition machinery (attachment edges with capacity > 1).
struct FlowProblem {
  int node_count = 0;
  std::vector<Edge> edges;
  std::vector<int> capacity;

  EdgeId add_edge(NodeId tail, NodeId head, int cap);
};

struct FlowResult {
  int value = 0;
  std::vector<int> flow;  // per edge
};

/// Edmonds-Karp with BFS preferring lowest edge id, so flows are
/// deterministic.
FlowResult max_flow(const FlowProblem& p, NodeId s, NodeId t);

/// Splits a flow into source-to-sink paths with multiplicities. Paths are
/// extracted lowest edge id first; each carries `amount` units.
struct FlowPath {
  std::vector<EdgeId> edges;
  int amount = 0;
};
std::vector<FlowPath> decompose_flow(const FlowProblem& p, const FlowResult& r,
                                     NodeId s, NodeId t);

}  // namespace secnc::net
