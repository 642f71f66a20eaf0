#include "secnc/netgraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace secnc::net {

NodeId Network::add_node(const std::string& name) {
  if (auto id = find_node(name)) return *id;
  node_names.push_back(name);
  return static_cast<NodeId>(node_names.size()) - 1;
}

EdgeId Network::add_edge(NodeId tail, NodeId head) {
  edges.push_back({tail, head});
  return static_cast<EdgeId>(edges.size()) - 1;
}

std::optional<NodeId> Network::find_node(const std::string& name) const {
  for (std::size_t i = 0; i < node_names.size(); ++i)
    if (node_names[i] == name) return static_cast<NodeId>(i);
  return std::nullopt;
}

std::vector<EdgeId> Network::in_edges(NodeId v) const {
  std::vector<EdgeId> r;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (edges[e].head == v) r.push_back(e);
  return r;
}

std::vector<EdgeId> Network::out_edges(NodeId v) const {
  std::vector<EdgeId> r;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (edges[e].tail == v) r.push_back(e);
  return r;
}

namespace {

// Topological node order, lowest node id first among ready nodes.
// Empty result signals a cycle.
std::vector<NodeId> topo_nodes(int n, const std::vector<Edge>& edges) {
  std::vector<int> indeg(n, 0);
  for (const Edge& e : edges) ++indeg[e.head];
  std::vector<NodeId> order;
  std::set<NodeId> ready;
  for (NodeId v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    NodeId v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (const Edge& e : edges)
      if (e.tail == v && --indeg[e.head] == 0) ready.insert(e.head);
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

}  // namespace

std::vector<EdgeId> Network::topological_edge_order() const {
  std::vector<NodeId> order = topo_nodes(node_count(), edges);
  if (order.empty() && node_count() > 0)
    throw std::invalid_argument("graph has a cycle");
  std::vector<int> pos(node_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<EdgeId> ids(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) ids[e] = e;
  std::stable_sort(ids.begin(), ids.end(),
                   [&](EdgeId a, EdgeId b) { return pos[edges[a].tail] < pos[edges[b].tail]; });
  return ids;
}

const char* to_string(ValidationError e) {
  switch (e) {
    case ValidationError::CyclicGraph: return "CyclicGraph";
    case ValidationError::SourceHasIncoming: return "SourceHasIncoming";
    case ValidationError::DestinationHasOutgoing: return "DestinationHasOutgoing";
    case ValidationError::DuplicateDestination: return "DuplicateDestination";
    case ValidationError::BadNodeRef: return "BadNodeRef";
  }
  return "?";
}

std::optional<ValidationError> validate(const Network& net) {
  int n = net.node_count();
  auto bad = [&](NodeId v) { return v < 0 || v >= n; };
  if (bad(net.source)) return ValidationError::BadNodeRef;
  for (NodeId d : net.destinations)
    if (bad(d)) return ValidationError::BadNodeRef;
  for (const Edge& e : net.edges)
    if (bad(e.tail) || bad(e.head)) return ValidationError::BadNodeRef;

  if (topo_nodes(n, net.edges).empty() && n > 0) return ValidationError::CyclicGraph;

  for (const Edge& e : net.edges)
    if (e.head == net.source) return ValidationError::SourceHasIncoming;

  std::set<NodeId> seen;
  for (NodeId d : net.destinations) {
    if (d == net.source || !seen.insert(d).second)
      return ValidationError::DuplicateDestination;
    for (const Edge& e : net.edges)
      if (e.tail == d) return ValidationError::DestinationHasOutgoing;
  }
  return std::nullopt;
}

MinCutProfile MinCutProfile::from_values(const std::vector<int>& v) {
  MinCutProfile p;
  std::size_t m = 0;
  while (((std::size_t{1} << m) - 1) < v.size()) ++m;
  if (((std::size_t{1} << m) - 1) != v.size())
    throw std::invalid_argument("profile needs 2^m - 1 values");
  p.m = static_cast<int>(m);
  p.values = v;
  return p;
}

EdgeId FlowProblem::add_edge(NodeId tail, NodeId head, int cap) {
  edges.push_back({tail, head});
  capacity.push_back(cap);
  return static_cast<EdgeId>(edges.size()) - 1;
}

FlowResult max_flow(const FlowProblem& p, NodeId s, NodeId t) {
  int ne = static_cast<int>(p.edges.size());
  std::vector<int> flow(ne, 0);
  int value = 0;

  // adjacency of residual arcs: 2*e forward, 2*e+1 backward
  std::vector<std::vector<int>> adj(p.node_count);
  for (int e = 0; e < ne; ++e) {
    adj[p.edges[e].tail].push_back(2 * e);
    adj[p.edges[e].head].push_back(2 * e + 1);
  }

  auto residual = [&](int arc) {
    int e = arc / 2;
    return arc % 2 == 0 ? p.capacity[e] - flow[e] : flow[e];
  };

  while (true) {
    std::vector<int> pred(p.node_count, -1);
    std::vector<bool> seen(p.node_count, false);
    std::deque<NodeId> q{s};
    seen[s] = true;
    while (!q.empty() && !seen[t]) {
      NodeId v = q.front();
      q.pop_front();
      for (int arc : adj[v]) {
        if (residual(arc) <= 0) continue;
        NodeId w = arc % 2 == 0 ? p.edges[arc / 2].head : p.edges[arc / 2].tail;
        if (seen[w]) continue;
        seen[w] = true;
        pred[w] = arc;
        q.push_back(w);
      }
    }
    if (!seen[t]) break;

    int aug = INT32_MAX;
    for (NodeId v = t; v != s;) {
      int arc = pred[v];
      aug = std::min(aug, residual(arc));
      v = arc % 2 == 0 ? p.edges[arc / 2].tail : p.edges[arc / 2].head;
    }
    for (NodeId v = t; v != s;) {
      int arc = pred[v];
      int e = arc / 2;
      flow[e] += arc % 2 == 0 ? aug : -aug;
      v = arc % 2 == 0 ? p.edges[e].tail : p.edges[e].head;
    }
    value += aug;
  }
  return {value, flow};
}

std::vector<FlowPath> decompose_flow(const FlowProblem& p, const FlowResult& r,
                                     NodeId s, NodeId t) {
  std::vector<int> remaining = r.flow;
  std::vector<FlowPath> paths;
  while (true) {
    // walk from s along flow-carrying edges, lowest edge id first
    std::vector<EdgeId> walk;
    NodeId v = s;
    while (v != t) {
      EdgeId next = -1;
      for (EdgeId e = 0; e < static_cast<EdgeId>(p.edges.size()); ++e)
        if (p.edges[e].tail == v && remaining[e] > 0) {
          next = e;
          break;
        }
      if (next == -1) break;
      walk.push_back(next);
      v = p.edges[next].head;
    }
    if (v != t || walk.empty()) break;
    int amount = INT32_MAX;
    for (EdgeId e : walk) amount = std::min(amount, remaining[e]);
    for (EdgeId e : walk) remaining[e] -= amount;
    paths.push_back({walk, amount});
  }
  return paths;
}

namespace {

constexpr int kInfCap = 1 << 28;

// Flow instance: the network's unit edges plus a super-sink attached to the
// destinations in `mask` with effectively infinite capacity.
FlowProblem cut_problem(const Network& net, std::uint32_t mask, NodeId* sink) {
  FlowProblem p;
  p.node_count = net.node_count() + 1;
  *sink = net.node_count();
  for (const Edge& e : net.edges) p.add_edge(e.tail, e.head, 1);
  for (int i = 0; i < net.dest_count(); ++i)
    if (mask & (1u << i)) p.add_edge(net.destinations[i], *sink, kInfCap);
  return p;
}

}  // namespace

int min_cut(const Network& net, std::uint32_t mask) {
  if (mask == 0) throw std::invalid_argument("destination subset is empty");
  if (mask >= (1u << net.dest_count()))
    throw std::invalid_argument("subset refers to a missing destination");
  NodeId sink;
  FlowProblem p = cut_problem(net, mask, &sink);
  return max_flow(p, net.source, sink).value;
}

MinCutProfile mincut_profile(const Network& net) {
  int m = net.dest_count();
  if (m > 8) throw std::invalid_argument("profiles limited to 8 destinations");
  MinCutProfile prof;
  prof.m = m;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask)
    prof.values.push_back(min_cut(net, mask));
  return prof;
}

std::vector<std::vector<EdgeId>> edge_disjoint_paths(const Network& net,
                                                     int dest_index, int count) {
  if (count == 0) return {};
  NodeId sink;
  FlowProblem p = cut_problem(net, 1u << dest_index, &sink);
  FlowResult r = max_flow(p, net.source, sink);
  if (r.value < count)
    throw std::runtime_error("requested more disjoint paths than the min-cut");

  std::vector<FlowPath> flows = decompose_flow(p, r, net.source, sink);
  std::vector<std::vector<EdgeId>> paths;
  for (const FlowPath& fp : flows) {
    if (static_cast<int>(paths.size()) == count) break;
    std::vector<EdgeId> path(fp.edges.begin(), fp.edges.end() - 1);  // drop attachment
    paths.push_back(path);
  }
  if (static_cast<int>(paths.size()) != count)
    throw std::runtime_error("flow decomposition shortfall");
  return paths;
}

Network reverse(const Network& net, int new_source_index) {
  if (new_source_index < 0 || new_source_index >= net.dest_count())
    throw std::invalid_argument("no such destination");
  Network r;
  r.node_names = net.node_names;
  for (const Edge& e : net.edges) r.edges.push_back({e.head, e.tail});
  r.source = net.destinations[new_source_index];
  r.destinations = {net.source};
  return r;
}

Network parse_graph_text(std::istream& in) {
  Network net;
  bool have_source = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string kw;
    if (!(ss >> kw)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("graph line " + std::to_string(lineno) + ": " + msg);
    };
    if (kw == "node") {
      std::string name;
      if (!(ss >> name)) fail("node needs a name");
      net.add_node(name);
    } else if (kw == "edge") {
      std::string a, b;
      if (!(ss >> a >> b)) fail("edge needs tail and head");
      net.add_edge(net.add_node(a), net.add_node(b));
    } else if (kw == "source") {
      std::string name;
      if (!(ss >> name)) fail("source needs a name");
      net.source = net.add_node(name);
      have_source = true;
    } else if (kw == "dest") {
      std::string name;
      if (!(ss >> name)) fail("dest needs a name");
      net.destinations.push_back(net.add_node(name));
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (!have_source) throw std::runtime_error("graph file declares no source");
  if (net.destinations.empty()) throw std::runtime_error("graph file declares no destination");
  if (auto err = validate(net))
    throw std::runtime_error(std::string("invalid network: ") + to_string(*err));
  return net;
}

Network parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return parse_graph_text(in);
}

std::string format_graph_text(const Network& net) {
  std::ostringstream out;
  for (const std::string& n : net.node_names) out << "node " << n << "\n";
  out << "source " << net.node_names[net.source] << "\n";
  for (NodeId d : net.destinations) out << "dest " << net.node_names[d] << "\n";
  for (const Edge& e : net.edges)
    out << "edge " << net.node_names[e.tail] << " " << net.node_names[e.head] << "\n";
  return out.str();
}

}  // namespace secnc::net
