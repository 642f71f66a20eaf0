#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "secnc/gf.hpp"
#include "secnc/netgraph.hpp"

namespace secnc::code {

/// Scalar linear network code: one global coding vector per edge over the
/// coordinates (W_1 block | ... | W_m block | key block). The symbol carried
/// by edge e is vectors[e] . (messages, keys).
struct NetworkCode {
  gf::Field field;
  std::vector<int> message_dims;
  int key_dim = 0;
  std::vector<std::vector<std::int64_t>> vectors;  // indexed by edge id

  int message_total() const;
  int vector_len() const { return message_total() + key_dim; }
  /// First coordinate of message block i.
  int block_offset(int block) const;
};

/// Local computability: for every edge e whose tail is not the source, the
/// vector of e must lie in the span of the vectors on I(tail(e)). Edges out
/// of nodes in `free_sources` are unconstrained; nodes with no incoming edges
/// that are not free can only carry the zero vector.
bool check_local(const NetworkCode& code, const net::Network& net);
bool check_local(const NetworkCode& code, const net::Network& net,
                 const std::vector<net::NodeId>& free_sources);

/// True when `dest_node` can recover every coordinate of message block
/// `block` from its incoming edges: each unit row of the block lies in the
/// row space of the stacked incoming vectors.
bool decodes_block(const NetworkCode& code, const net::Network& net,
                   net::NodeId dest_node, int block);
bool check_decodable(const NetworkCode& code, const net::Network& net, int dest_index);

/// Decodability when the receiver additionally knows the whole key block
/// (used for key-encrypted routed traffic where keys were shared beforehand).
bool decodes_block_with_known_keys(const NetworkCode& code, const net::Network& net,
                                   net::NodeId dest_node, int block);

struct SecrecyResult {
  bool secure = false;
  /// First violating eavesdropper subset (sizes ascending, then
  /// lexicographic); empty when secure.
  std::vector<net::EdgeId> counterexample;
};

/// Perfect secrecy against any wiretap of up to k edges. For the stacked
/// vectors of a subset Z written as [A_Z | B_Z] (message columns, key
/// columns), Z leaks nothing iff rank(B_Z) = rank([A_Z | B_Z]); this equality
/// for all |Z| <= k is equivalent to I(W; X_Z) = 0 under uniform independent
/// messages and keys.
SecrecyResult check_secrecy(const NetworkCode& code, const net::Network& net, int k);

/// Definition-level oracle: enumerates every (message, key) assignment and
/// compares the conditional distribution of each wiretap view across message
/// values. Only for tiny instances (q^(sum R + r) <= 10^7); throws otherwise.
bool brute_force_secrecy(const NetworkCode& code, const net::Network& net, int k);

/// Symbols carried by every edge for one concrete (messages | keys) input.
std::vector<std::int64_t> transmit(const NetworkCode& code,
                                   const std::vector<std::int64_t>& input);
/// Decode of message block `block` at `dest_node` from received edge symbols;
/// nullopt when the block is not decodable.
std::optional<std::vector<std::int64_t>> decode_block(
    const NetworkCode& code, const net::Network& net, net::NodeId dest_node,
    int block, const std::vector<std::int64_t>& edge_symbols);

/// One unicast demand. Multi-source instances (reverse networks) list one
/// session per source; each source owns its message block and an independent
/// key block.
struct Session {
  net::NodeId source;
  net::NodeId dest;
  int rate = 0;
};

enum class SearchStatus { Found, NoCodeExists, SearchSpaceTooLarge };

struct SearchResult {
  SearchStatus status;
  std::optional<NetworkCode> found;
  std::vector<int> key_dims;  // per session-source key budget of the found code
};

/// Exhaustive search over scalar linear codes with local computability,
/// per-source key budgets 0..r_max and the given field. Returns the first
/// code (deterministic enumeration order) that decodes every session at its
/// rate and passes the secrecy check, or NoCodeExists after exhausting the
/// space. Tiny instances only (<= 6 edges, q <= 5, r_max <= 2).
SearchResult search_no_code(const net::Network& net, const std::vector<Session>& sessions,
                            int k, std::int64_t q, int r_max);
/// Single-source convenience: sessions run from net.source to each
/// destination at the target rates.
SearchResult search_no_code(const net::Network& net, const std::vector<int>& target,
                            int k, std::int64_t q, int r_max);

std::string code_json(const NetworkCode& code);
NetworkCode code_from_json(std::istream& in);
NetworkCode code_from_json_file(const std::string& path);

}  // namespace secnc::code
