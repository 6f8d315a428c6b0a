#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace gee {

using node_id = std::uint32_t;
using arc_index = std::uint64_t;

struct edge {
  node_id u;
  node_id v;
  double w;

  friend bool operator==(const edge&, const edge&) = default;
};

/// Flat (source, destination, weight) list. Every endpoint is < n.
struct edge_list {
  std::uint64_t n = 0;
  std::vector<edge> edges;
  bool directed = true;

  std::size_t size() const noexcept { return edges.size(); }
};

/// Compressed sparse row adjacency. Arcs of node u live in
/// [offsets[u], offsets[u + 1]) of targets/weights, in input order.
struct csr_graph {
  std::uint64_t n = 0;
  std::vector<arc_index> offsets{0};
  std::vector<node_id> targets;
  std::vector<double> weights;
  bool directed = true;

  arc_index num_arcs() const noexcept { return targets.size(); }
  arc_index degree(node_id u) const noexcept { return offsets[u + 1] - offsets[u]; }

  std::span<const node_id> neighbors(node_id u) const noexcept {
    return {targets.data() + offsets[u], static_cast<std::size_t>(degree(u))};
  }
  std::span<const double> arc_weights(node_id u) const noexcept {
    return {weights.data() + offsets[u], static_cast<std::size_t>(degree(u))};
  }

  friend bool operator==(const csr_graph&, const csr_graph&) = default;
};

/// Parses a SNAP-style text edge list: "u v" or "u v w" per line, '#' comments.
/// n is one past the largest id seen; ids are not compacted.
/// Throws parse_error (with line number) or io_error.
edge_list load_edge_list(const std::filesystem::path& path, bool weighted, bool directed);

/// Same grammar as load_edge_list, from an in-memory buffer.
edge_list parse_edge_list(std::string_view text, bool weighted, bool directed);

/// Writes "u v" (or "u v w" when with_weights) lines.
void write_edge_list(const edge_list& el, const std::filesystem::path& path, bool with_weights);

/// Stable counting sort into CSR. Undirected inputs get both (u,v) and (v,u).
csr_graph build_csr(const edge_list& el);

/// Inverse of build_csr up to arc order: directed graphs yield one edge per arc,
/// symmetric graphs yield one edge per mirrored pair.
edge_list edge_list_from_csr(const csr_graph& g);

/// Throws contract_error if offsets/targets/weights break the CSR invariants.
void validate(const csr_graph& g);
void validate(const edge_list& el);

/// G(n, s): s directed unit-weight edges, endpoints uniform on [0, n), with
/// replacement. Self-loops and duplicates are kept.
edge_list generate_erdos_renyi(std::uint64_t n, std::uint64_t s, std::uint64_t seed);

// Binary cache. Layout (little-endian):
//   "GEECSR1\0" | u8 version | u64 n | u64 arcs | u8 directed |
//   u64 offsets[n+1] | u32 targets[arcs] | f64 weights[arcs]
inline constexpr char csr_cache_magic[8] = {'G', 'E', 'E', 'C', 'S', 'R', '1', '\0'};
inline constexpr std::uint8_t csr_cache_version = 1;

void write_binary_cache(const csr_graph& g, const std::filesystem::path& path);
csr_graph read_binary_cache(const std::filesystem::path& path);

/// True if the file starts with the CSR cache magic.
bool is_binary_cache(const std::filesystem::path& path);

}  // namespace gee
