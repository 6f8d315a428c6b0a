#include <cstring>
#include <fstream>
#include <limits>
#include <string>

#include "binary_io.hpp"
#include "gee/errors.hpp"
#include "gee/graph.hpp"

namespace gee {

void write_binary_cache(const csr_graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
  out.write(csr_cache_magic, sizeof csr_cache_magic);
  detail::write_le<std::uint8_t>(out, csr_cache_version);
  detail::write_le<std::uint64_t>(out, g.n);
  detail::write_le<std::uint64_t>(out, g.num_arcs());
  detail::write_le<std::uint8_t>(out, g.directed ? 1 : 0);
  detail::write_le(out, std::span<const arc_index>(g.offsets));
  detail::write_le(out, std::span<const node_id>(g.targets));
  detail::write_le(out, std::span<const double>(g.weights));
  if (!out) throw io_error("write failed on '" + path.string() + "'");
}

csr_graph read_binary_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path.string() + "'");
  const std::string where = " in '" + path.string() + "'";

  char magic[sizeof csr_cache_magic];
  in.read(magic, sizeof magic);
  if (in.gcount() != sizeof magic || std::memcmp(magic, csr_cache_magic, sizeof magic) != 0) {
    throw format_error("bad CSR cache magic" + where);
  }
  std::uint8_t version = 0;
  if (!detail::read_le(in, version)) throw format_error("truncated CSR cache header" + where);
  if (version != csr_cache_version) {
    throw format_error("unsupported CSR cache version " + std::to_string(version) + where);
  }

  std::uint64_t n = 0, arcs = 0;
  std::uint8_t directed = 0;
  if (!detail::read_le(in, n) || !detail::read_le(in, arcs) || !detail::read_le(in, directed)) {
    throw format_error("truncated CSR cache header" + where);
  }
  if (directed > 1) throw format_error("bad directed flag" + where);

  // Check the payload size before allocating, so a corrupt header cannot
  // request an absurd allocation.
  const auto header_end = in.tellg();
  in.seekg(0, std::ios::end);
  const auto file_end = in.tellg();
  in.seekg(header_end);
  const std::uint64_t available = static_cast<std::uint64_t>(file_end - header_end);
  constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 16;
  if (n >= limit || arcs >= limit ||
      available != (n + 1) * sizeof(arc_index) + arcs * (sizeof(node_id) + sizeof(double))) {
    throw format_error("CSR cache payload size does not match header" + where);
  }

  csr_graph g;
  g.n = n;
  g.directed = directed == 1;
  g.offsets.resize(n + 1);
  g.targets.resize(arcs);
  g.weights.resize(arcs);
  if (!detail::read_le(in, std::span<arc_index>(g.offsets)) ||
      !detail::read_le(in, std::span<node_id>(g.targets)) ||
      !detail::read_le(in, std::span<double>(g.weights))) {
    throw format_error("truncated CSR cache payload" + where);
  }
  try {
    validate(g);
  } catch (const contract_error& e) {
    throw format_error(std::string("corrupt CSR cache: ") + e.what() + where);
  }
  return g;
}

bool is_binary_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[sizeof csr_cache_magic];
  in.read(magic, sizeof magic);
  return in.gcount() == sizeof magic && std::memcmp(magic, csr_cache_magic, sizeof magic) == 0;
}

}  // namespace gee
