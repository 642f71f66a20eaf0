#include "secnc/code.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace secnc::code {

int NetworkCode::message_total() const {
  return std::accumulate(message_dims.begin(), message_dims.end(), 0);
}

int NetworkCode::block_offset(int block) const {
  return std::accumulate(message_dims.begin(), message_dims.begin() + block, 0);
}

namespace {

void require_vectors(const NetworkCode& code, const net::Network& net) {
  if (code.vectors.size() != static_cast<std::size_t>(net.edge_count()))
    throw std::invalid_argument("code is missing vectors for some edges");
  for (const auto& v : code.vectors)
    if (v.size() != static_cast<std::size_t>(code.vector_len()))
      throw std::invalid_argument("coding vector of wrong length");
}

gf::Matrix stack_edges(const NetworkCode& code, const std::vector<net::EdgeId>& ids) {
  gf::Matrix m(code.field, ids.size(), code.vector_len());
  for (std::size_t i = 0; i < ids.size(); ++i) m.set_row(i, code.vectors[ids[i]]);
  return m;
}

bool vector_is_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

bool check_local(const NetworkCode& code, const net::Network& net) {
  return check_local(code, net, {net.source});
}

bool check_local(const NetworkCode& code, const net::Network& net,
                 const std::vector<net::NodeId>& free_sources) {
  require_vectors(code, net);
  for (net::EdgeId e = 0; e < net.edge_count(); ++e) {
    net::NodeId tail = net.edges[e].tail;
    if (std::find(free_sources.begin(), free_sources.end(), tail) != free_sources.end())
      continue;
    std::vector<net::EdgeId> in = net.in_edges(tail);
    if (in.empty()) {
      // no randomness at interior nodes: a node with no inputs sends constants
      if (!vector_is_zero(code.vectors[e])) return false;
      continue;
    }
    if (!gf::in_row_space(stack_edges(code, in), code.vectors[e])) return false;
  }
  return true;
}

bool decodes_block(const NetworkCode& code, const net::Network& net,
                   net::NodeId dest_node, int block) {
  require_vectors(code, net);
  if (code.message_dims.at(block) == 0) return true;
  gf::Matrix rx = stack_edges(code, net.in_edges(dest_node));
  int off = code.block_offset(block);
  for (int j = 0; j < code.message_dims[block]; ++j) {
    std::vector<std::int64_t> unit(code.vector_len(), 0);
    unit[off + j] = 1;
    if (!gf::in_row_space(rx, unit)) return false;
  }
  return true;
}

bool check_decodable(const NetworkCode& code, const net::Network& net, int dest_index) {
  return decodes_block(code, net, net.destinations.at(dest_index), dest_index);
}

bool decodes_block_with_known_keys(const NetworkCode& code, const net::Network& net,
                                   net::NodeId dest_node, int block) {
  require_vectors(code, net);
  if (code.message_dims.at(block) == 0) return true;
  gf::Matrix rx = stack_edges(code, net.in_edges(dest_node));
  gf::Matrix keys(code.field, code.key_dim, code.vector_len());
  for (int j = 0; j < code.key_dim; ++j) keys.set(j, code.message_total() + j, 1);
  gf::Matrix with_keys = rx.stack_below(keys);
  int off = code.block_offset(block);
  for (int j = 0; j < code.message_dims[block]; ++j) {
    std::vector<std::int64_t> unit(code.vector_len(), 0);
    unit[off + j] = 1;
    if (!gf::in_row_space(with_keys, unit)) return false;
  }
  return true;
}

namespace {

bool subset_secure(const NetworkCode& code, const std::vector<net::EdgeId>& z) {
  int mt = code.message_total();
  gf::Matrix stacked = stack_edges(code, z);
  std::vector<std::size_t> key_cols(code.key_dim);
  std::iota(key_cols.begin(), key_cols.end(), static_cast<std::size_t>(mt));
  return gf::rank(stacked.select_cols(key_cols)) == gf::rank(stacked);
}

// Visits subsets of {0..n-1} of exactly `size` in lexicographic order.
template <typename F>
bool for_each_subset(int n, int size, F&& visit) {
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  if (size > n) return true;
  while (true) {
    if (!visit(idx)) return false;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SecrecyResult check_secrecy(const NetworkCode& code, const net::Network& net, int k) {
  require_vectors(code, net);
  int n = net.edge_count();
  SecrecyResult res;
  res.secure = true;
  for (int size = 1; size <= std::min(k, n) && res.secure; ++size) {
    for_each_subset(n, size, [&](const std::vector<int>& idx) {
      std::vector<net::EdgeId> z(idx.begin(), idx.end());
      if (!subset_secure(code, z)) {
        res.secure = false;
        res.counterexample = z;
        return false;
      }
      return true;
    });
  }
  return res;
}

std::vector<std::int64_t> transmit(const NetworkCode& code,
                                   const std::vector<std::int64_t>& input) {
  if (input.size() != static_cast<std::size_t>(code.vector_len()))
    throw std::invalid_argument("input length mismatch");
  std::vector<std::int64_t> out(code.vectors.size(), 0);
  for (std::size_t e = 0; e < code.vectors.size(); ++e) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < input.size(); ++j)
      acc = code.field.add(acc, code.field.mul(code.vectors[e][j], code.field.reduce(input[j])));
    out[e] = acc;
  }
  return out;
}

std::optional<std::vector<std::int64_t>> decode_block(
    const NetworkCode& code, const net::Network& net, net::NodeId dest_node,
    int block, const std::vector<std::int64_t>& edge_symbols) {
  std::vector<net::EdgeId> in = net.in_edges(dest_node);
  gf::Matrix rx = stack_edges(code, in);
  int dim = code.message_dims.at(block);
  int off = code.block_offset(block);
  gf::Matrix targets(code.field, dim, code.vector_len());
  for (int j = 0; j < dim; ++j) targets.set(j, off + j, 1);
  // combiner C with C * rx = targets, i.e. rx^T * C^T = targets^T
  auto ct = gf::solve_right(rx.transpose(), targets.transpose());
  if (!ct) return std::nullopt;
  gf::Matrix c = ct->transpose();
  std::vector<std::int64_t> decoded(dim, 0);
  for (int j = 0; j < dim; ++j) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < in.size(); ++i)
      acc = code.field.add(acc, code.field.mul(c.at(j, i), edge_symbols[in[i]]));
    decoded[j] = acc;
  }
  return decoded;
}

bool brute_force_secrecy(const NetworkCode& code, const net::Network& net, int k) {
  require_vectors(code, net);
  int len = code.vector_len();
  std::int64_t q = code.field.modulus();
  double space = std::pow(static_cast<double>(q), len);
  if (space > 1e7) throw std::invalid_argument("instance too large for exhaustive secrecy check");

  int mt = code.message_total();
  std::int64_t n_msg = 1, n_key = 1;
  for (int i = 0; i < mt; ++i) n_msg *= q;
  for (int i = 0; i < code.key_dim; ++i) n_key *= q;

  int ne = net.edge_count();
  bool ok = true;
  for (int size = 1; size <= std::min(k, ne) && ok; ++size) {
    for_each_subset(ne, size, [&](const std::vector<int>& z) {
      // distribution of the wiretap view for each message value
      std::vector<std::map<std::vector<std::int64_t>, long>> hist(n_msg);
      std::vector<std::int64_t> input(len, 0);
      for (std::int64_t wi = 0; wi < n_msg; ++wi) {
        std::int64_t w = wi;
        for (int i = 0; i < mt; ++i) {
          input[i] = w % q;
          w /= q;
        }
        for (std::int64_t ki = 0; ki < n_key; ++ki) {
          std::int64_t kk = ki;
          for (int i = 0; i < code.key_dim; ++i) {
            input[mt + i] = kk % q;
            kk /= q;
          }
          std::vector<std::int64_t> view;
          for (int e : z) {
            std::int64_t acc = 0;
            for (int j = 0; j < len; ++j)
              acc = code.field.add(acc, code.field.mul(code.vectors[e][j], input[j]));
            view.push_back(acc);
          }
          ++hist[wi][view];
        }
      }
      for (std::int64_t wi = 1; wi < n_msg; ++wi)
        if (hist[wi] != hist[0]) {
          ok = false;
          return false;
        }
      return true;
    });
  }
  return ok;
}

namespace {

struct SearchLayout {
  std::vector<net::NodeId> sources;           // distinct, in session order
  std::vector<int> session_source_idx;        // session -> index into sources
  std::vector<int> key_dims;                  // per source
  int message_total = 0;
  int key_total = 0;
  std::vector<int> block_offsets;             // per session
  std::vector<int> key_offsets;               // per source
};

SearchLayout make_layout(const std::vector<Session>& sessions, const std::vector<int>& key_dims) {
  SearchLayout l;
  for (const Session& s : sessions) {
    auto it = std::find(l.sources.begin(), l.sources.end(), s.source);
    if (it == l.sources.end()) {
      l.sources.push_back(s.source);
      l.session_source_idx.push_back(static_cast<int>(l.sources.size()) - 1);
    } else {
      l.session_source_idx.push_back(static_cast<int>(it - l.sources.begin()));
    }
  }
  l.key_dims = key_dims;
  for (const Session& s : sessions) {
    l.block_offsets.push_back(l.message_total);
    l.message_total += s.rate;
  }
  for (std::size_t i = 0; i < l.sources.size(); ++i) {
    l.key_offsets.push_back(l.message_total + l.key_total);
    l.key_total += key_dims[i];
  }
  return l;
}

}  // namespace

SearchResult search_no_code(const net::Network& net, const std::vector<Session>& sessions,
                            int k, std::int64_t q, int r_max) {
  if (net.edge_count() > 6 || q > 5 || r_max > 2)
    return {SearchStatus::SearchSpaceTooLarge, std::nullopt, {}};
  gf::Field field(q);

  std::vector<net::NodeId> source_nodes;
  for (const Session& s : sessions)
    if (std::find(source_nodes.begin(), source_nodes.end(), s.source) == source_nodes.end())
      source_nodes.push_back(s.source);
  int ns = static_cast<int>(source_nodes.size());

  std::vector<net::EdgeId> order = net.topological_edge_order();

  // key budgets per source, tried in order of total size then lex
  std::vector<std::vector<int>> budgets;
  std::vector<int> cur(ns, 0);
  while (true) {
    budgets.push_back(cur);
    int i = ns - 1;
    while (i >= 0 && cur[i] == r_max) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(budgets.begin(), budgets.end(), [](const auto& a, const auto& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0);
    int sb = std::accumulate(b.begin(), b.end(), 0);
    return sa != sb ? sa < sb : a < b;
  });

  for (const std::vector<int>& key_dims : budgets) {
    SearchLayout layout = make_layout(sessions, key_dims);
    int len = layout.message_total + layout.key_total;

    // per-edge choice descriptor: either a set of allowed coordinates
    // (source edge) or the incoming edge list (interior edge)
    struct Slot {
      net::EdgeId edge;
      bool is_source;
      std::vector<int> coords;          // allowed coordinates
      std::vector<net::EdgeId> parents; // incoming edges
    };
    std::vector<Slot> slots;
    double total = 1;
    for (net::EdgeId e : order) {
      Slot s;
      s.edge = e;
      net::NodeId tail = net.edges[e].tail;
      auto src = std::find(source_nodes.begin(), source_nodes.end(), tail);
      s.is_source = src != source_nodes.end();
      if (s.is_source) {
        int si = static_cast<int>(src - source_nodes.begin());
        for (std::size_t j = 0; j < sessions.size(); ++j)
          if (sessions[j].source == tail)
            for (int c = 0; c < sessions[j].rate; ++c)
              s.coords.push_back(layout.block_offsets[j] + c);
        for (int c = 0; c < key_dims[si]; ++c) s.coords.push_back(layout.key_offsets[si] + c);
        total *= std::pow(static_cast<double>(q), s.coords.size());
      } else {
        s.parents = net.in_edges(tail);
        total *= std::pow(static_cast<double>(q), s.parents.size());
      }
      slots.push_back(s);
    }
    if (total > 5e7) return {SearchStatus::SearchSpaceTooLarge, std::nullopt, {}};

    std::vector<std::vector<std::int64_t>> choice(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
      choice[i].assign(slots[i].is_source ? slots[i].coords.size() : slots[i].parents.size(), 0);

    NetworkCode code{field, {}, layout.key_total,
                     std::vector<std::vector<std::int64_t>>(
                         net.edge_count(), std::vector<std::int64_t>(len, 0))};
    for (const Session& s : sessions) code.message_dims.push_back(s.rate);

    auto candidate_ok = [&]() {
      // materialize vectors in topological order
      for (std::size_t i = 0; i < slots.size(); ++i) {
        const Slot& s = slots[i];
        auto& v = code.vectors[s.edge];
        std::fill(v.begin(), v.end(), 0);
        if (s.is_source) {
          for (std::size_t j = 0; j < s.coords.size(); ++j) v[s.coords[j]] = choice[i][j];
        } else {
          for (std::size_t j = 0; j < s.parents.size(); ++j) {
            std::int64_t coef = choice[i][j];
            if (coef == 0) continue;
            const auto& pv = code.vectors[s.parents[j]];
            for (int c = 0; c < len; ++c) v[c] = field.add(v[c], field.mul(coef, pv[c]));
          }
        }
      }
      for (std::size_t j = 0; j < sessions.size(); ++j)
        if (!decodes_block(code, net, sessions[j].dest, static_cast<int>(j))) return false;
      return check_secrecy(code, net, k).secure;
    };

    std::vector<std::int64_t*> digits;
    for (auto& c : choice)
      for (auto& x : c) digits.push_back(&x);

    bool wrapped = false;
    while (!wrapped) {
      if (candidate_ok()) return {SearchStatus::Found, code, key_dims};
      std::size_t i = 0;
      for (; i < digits.size(); ++i) {
        if (*digits[i] + 1 < q) {
          ++*digits[i];
          break;
        }
        *digits[i] = 0;
      }
      wrapped = i == digits.size();
    }
  }
  return {SearchStatus::NoCodeExists, std::nullopt, {}};
}

SearchResult search_no_code(const net::Network& net, const std::vector<int>& target,
                            int k, std::int64_t q, int r_max) {
  std::vector<Session> sessions;
  for (std::size_t i = 0; i < target.size(); ++i)
    sessions.push_back({net.source, net.destinations.at(i), target[i]});
  return search_no_code(net, sessions, k, q, r_max);
}

std::string code_json(const NetworkCode& code) {
  nlohmann::json j;
  j["field"] = code.field.modulus();
  j["message_dims"] = code.message_dims;
  j["key_dim"] = code.key_dim;
  j["vectors"] = code.vectors;
  return j.dump(2);
}

NetworkCode code_from_json(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  NetworkCode code{gf::Field(j.at("field").get<std::int64_t>()),
                   j.at("message_dims").get<std::vector<int>>(),
                   j.at("key_dim").get<int>(),
                   j.at("vectors").get<std::vector<std::vector<std::int64_t>>>()};
  for (auto& v : code.vectors)
    for (auto& x : v) x = code.field.reduce(x);
  return code;
}

NetworkCode code_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file " + path);
  return code_from_json(in);
}

}  // namespace secnc::code
