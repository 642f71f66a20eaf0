#include "secnc/separation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace secnc::sep {

net::Network induced_subnetwork(const net::Network& net,
                                const std::vector<net::EdgeId>& edge_ids,
                                std::vector<net::EdgeId>* parent_ids) {
  net::Network sub;
  sub.node_names = net.node_names;
  sub.source = net.source;
  sub.destinations = net.destinations;
  for (net::EdgeId e : edge_ids) sub.edges.push_back(net.edges[e]);
  if (parent_ids) *parent_ids = edge_ids;
  return sub;
}

int subset_min_cut(const net::Network& net, const std::vector<net::EdgeId>& subset,
                   std::uint32_t mask) {
  return net::min_cut(induced_subnetwork(net, subset), mask);
}

std::pair<bool, regions::StarProfile> check_separable(const net::MinCutProfile& profile) {
  regions::StarProfile star = regions::star_mincuts(profile);
  return {regions::is_separable_profile(star), star};
}

namespace {

using net::EdgeId;
using net::NodeId;

struct RoundResult {
  std::vector<std::vector<EdgeId>> extracted;   // exclusively-green paths, graph edges
  std::vector<std::vector<EdgeId>> kept_green;  // remaining green paths, graph edges
  std::vector<std::vector<EdgeId>> red;         // final red paths
};

// One splitting round over `subset`: green = disjoint paths to a super-sink
// attached at dest_excl (capacity attach_excl) and dest_other (attach_other);
// red = disjoint paths to dest_other. Recolors until every green path is
// exclusively green or starts with a red edge, then extracts `extract_count`
// exclusively-green paths (they must run through dest_excl).
RoundResult split_round(const net::Network& net, const std::vector<EdgeId>& subset,
                        int dest_excl, int dest_other, int attach_excl,
                        int attach_other, int extract_count) {
  NodeId d_excl = net.destinations[dest_excl];
  NodeId d_other = net.destinations[dest_other];
  NodeId sink = net.node_count();

  // green flow: subset edges plus unit attachment edges to the super-sink
  net::FlowProblem gp;
  gp.node_count = net.node_count() + 1;
  std::vector<EdgeId> parent;  // flow edge -> graph edge, -1 for attachments
  for (EdgeId e : subset) {
    gp.add_edge(net.edges[e].tail, net.edges[e].head, 1);
    parent.push_back(e);
  }
  for (int i = 0; i < attach_excl; ++i) {
    gp.add_edge(d_excl, sink, 1);
    parent.push_back(-1);
  }
  for (int i = 0; i < attach_other; ++i) {
    gp.add_edge(d_other, sink, 1);
    parent.push_back(-1);
  }
  net::FlowResult gf = net::max_flow(gp, net.source, sink);
  if (gf.value != attach_excl + attach_other)
    throw InternalError("super-sink flow " + std::to_string(gf.value) + " != " +
                        std::to_string(attach_excl + attach_other));

  struct GreenPath {
    std::vector<EdgeId> edges;  // graph edge ids
    NodeId through;             // destination the path leaves the graph at
  };
  std::vector<GreenPath> green;
  for (const net::FlowPath& fp : net::decompose_flow(gp, gf, net.source, sink)) {
    GreenPath g;
    for (std::size_t i = 0; i + 1 < fp.edges.size(); ++i) g.edges.push_back(parent[fp.edges[i]]);
    g.through = gp.edges[fp.edges.back()].tail;
    green.push_back(g);
  }

  // red flow: disjoint paths to dest_other within the subset alone
  net::FlowProblem rp;
  rp.node_count = net.node_count();
  for (EdgeId e : subset) rp.add_edge(net.edges[e].tail, net.edges[e].head, 1);
  net::FlowResult rf = net::max_flow(rp, net.source, d_other);
  std::vector<std::vector<EdgeId>> red;
  for (const net::FlowPath& fp : net::decompose_flow(rp, rf, net.source, d_other)) {
    std::vector<EdgeId> path;
    for (EdgeId fe : fp.edges) path.push_back(subset[fe]);
    red.push_back(path);
  }

  std::vector<int> red_of(net.edge_count(), -1);
  for (std::size_t i = 0; i < red.size(); ++i)
    for (EdgeId e : red[i]) red_of[e] = static_cast<int>(i);

  // recoloring: handle green paths that contain a red edge but do not start
  // with one, by pushing the red path onto the green prefix
  long long cap = 1LL * net.edge_count() * net.edge_count() + 4;
  long long iters = 0;
  while (true) {
    int pick = -1, e_pos = -1;
    for (std::size_t i = 0; i < green.size() && pick < 0; ++i) {
      const auto& pe = green[i].edges;
      if (pe.empty() || red_of[pe[0]] != -1) continue;
      for (std::size_t j = 1; j < pe.size(); ++j)
        if (red_of[pe[j]] != -1) {
          pick = static_cast<int>(i);
          e_pos = static_cast<int>(j);
          break;
        }
    }
    if (pick < 0) break;
    if (++iters > cap)
      throw InternalError("recoloring exceeded its iteration cap");

    const auto& pe = green[pick].edges;
    EdgeId e = pe[e_pos];
    int gi = red_of[e];
    const std::vector<EdgeId>& g = red[gi];
    std::size_t gpos = std::find(g.begin(), g.end(), e) - g.begin();

    std::vector<EdgeId> replacement(pe.begin(), pe.begin() + e_pos);  // green prefix
    for (EdgeId x : std::vector<EdgeId>(g.begin(), g.begin() + gpos)) red_of[x] = -1;
    replacement.push_back(e);
    replacement.insert(replacement.end(), g.begin() + gpos + 1, g.end());
    for (EdgeId x : replacement) red_of[x] = gi;
    red[gi] = replacement;
  }

  RoundResult out;
  for (const GreenPath& g : green) {
    bool exclusive = std::none_of(g.edges.begin(), g.edges.end(),
                                  [&](EdgeId e) { return red_of[e] != -1; });
    if (exclusive && static_cast<int>(out.extracted.size()) < extract_count) {
      if (g.through != d_excl)
        throw InternalError("exclusively green path leaves through the wrong destination");
      out.extracted.push_back(g.edges);
    } else {
      out.kept_green.push_back(g.edges);
    }
  }
  if (static_cast<int>(out.extracted.size()) != extract_count)
    throw InternalError("found " + std::to_string(out.extracted.size()) +
                        " exclusively green paths, needed " + std::to_string(extract_count));
  out.red = red;
  return out;
}

std::vector<EdgeId> union_of(const std::vector<std::vector<EdgeId>>& paths) {
  std::set<EdgeId> s;
  for (const auto& p : paths) s.insert(p.begin(), p.end());
  return {s.begin(), s.end()};
}

}  // namespace

Partition2 separate_two_dest(const net::Network& net) {
  if (net.dest_count() != 2) throw std::invalid_argument("partition needs exactly 2 destinations");
  if (auto err = validate(net))
    throw std::invalid_argument(std::string("invalid network: ") + to_string(*err));

  net::MinCutProfile prof = mincut_profile(net);
  int m1 = prof.at(0b01), m2 = prof.at(0b10), m12 = prof.at(0b11);
  long long s1 = m12 - m2, s2 = m12 - m1, s12 = m1 + m2 - m12;

  std::vector<EdgeId> all(net.edge_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e) all[e] = e;

  // split off the D_1-exclusive part
  RoundResult first = split_round(net, all, 0, 1, m1, static_cast<int>(s2),
                                  static_cast<int>(s1));
  Partition2 part;
  part.star1 = s1;
  part.star2 = s2;
  part.star12 = s12;
  part.g1 = union_of(first.extracted);

  std::set<EdgeId> taken(part.g1.begin(), part.g1.end());
  std::vector<EdgeId> rest;
  for (EdgeId e : all)
    if (!taken.count(e)) rest.push_back(e);

  // split off the D_2-exclusive part of the remainder
  RoundResult second = split_round(net, rest, 1, 0, static_cast<int>(s2 + s12), 0,
                                   static_cast<int>(s2));
  part.g2 = union_of(second.extracted);

  std::vector<std::vector<EdgeId>> g3_paths = second.kept_green;
  g3_paths.insert(g3_paths.end(), second.red.begin(), second.red.end());
  part.g3 = union_of(g3_paths);

  std::set<EdgeId> used(part.g1.begin(), part.g1.end());
  used.insert(part.g2.begin(), part.g2.end());
  used.insert(part.g3.begin(), part.g3.end());
  for (EdgeId e : all)
    if (!used.count(e)) part.unused.push_back(e);

  auto expect = [&](const std::vector<EdgeId>& part_edges, std::uint32_t mask,
                    long long want, const char* label) {
    int got = subset_min_cut(net, part_edges, mask);
    if (got != want) {
      std::ostringstream os;
      os << "partition part " << label << " has cut " << got << " for subset "
         << regions::subset_to_string(mask) << ", expected " << want;
      throw InternalError(os.str());
    }
  };
  expect(part.g1, 0b01, s1, "g1");
  expect(part.g1, 0b10, 0, "g1");
  expect(part.g2, 0b01, 0, "g2");
  expect(part.g2, 0b10, s2, "g2");
  expect(part.g3, 0b01, s12, "g3");
  expect(part.g3, 0b10, s12, "g3");
  expect(part.g3, 0b11, s12, "g3");
  return part;
}

}  // namespace secnc::sep
