#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "binary_io.hpp"
#include "gee/encoder.hpp"
#include "gee/errors.hpp"

namespace gee {

namespace {

void write_csv(const embedding_matrix& z, std::ostream& out) {
  std::string line;
  char buf[32];
  for (std::uint64_t i = 0; i < z.rows(); ++i) {
    line.clear();
    const auto row = z.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += ',';
      // Shortest representation that parses back to the same double.
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, row[j]);
      line.append(buf, ptr);
    }
    line += '\n';
    out << line;
  }
}

embedding_matrix read_csv(std::istream& in, const std::string& where) {
  std::vector<double> values;
  std::uint64_t n = 0;
  std::size_t k = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t fields = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (true) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) throw parse_error(n + 1, "bad real in embedding csv" + where);
      values.push_back(v);
      ++fields;
      if (ptr == end) break;
      if (*ptr != ',') throw parse_error(n + 1, "expected ',' in embedding csv" + where);
      p = ptr + 1;
    }
    if (n == 0) k = fields;
    if (fields != k) throw parse_error(n + 1, "ragged row in embedding csv" + where);
    ++n;
  }
  embedding_matrix z(n, static_cast<class_id>(k));
  std::copy(values.begin(), values.end(), z.values().begin());
  return z;
}

}  // namespace

void write_embedding(const embedding_matrix& z, const std::filesystem::path& path,
                     embedding_format format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
  if (format == embedding_format::csv) {
    write_csv(z, out);
  } else {
    out.write(embedding_magic, sizeof embedding_magic);
    detail::write_le<std::uint64_t>(out, z.rows());
    detail::write_le<std::uint64_t>(out, static_cast<std::uint64_t>(z.cols()));
    detail::write_le(out, z.values());
  }
  out.flush();
  if (!out) throw io_error("write failed on '" + path.string() + "'");
}

embedding_matrix read_embedding(const std::filesystem::path& path, embedding_format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path.string() + "'");
  const std::string where = " in '" + path.string() + "'";
  if (format == embedding_format::csv) return read_csv(in, where);

  char magic[sizeof embedding_magic];
  in.read(magic, sizeof magic);
  if (in.gcount() != sizeof magic || std::memcmp(magic, embedding_magic, sizeof magic) != 0) {
    throw format_error("bad embedding magic" + where);
  }
  std::uint64_t n = 0, k = 0;
  if (!detail::read_le(in, n) || !detail::read_le(in, k)) {
    throw format_error("truncated embedding header" + where);
  }
  if (k > static_cast<std::uint64_t>(std::numeric_limits<class_id>::max())) {
    throw format_error("embedding column count out of range" + where);
  }
  const auto header_end = in.tellg();
  in.seekg(0, std::ios::end);
  const auto available = static_cast<std::uint64_t>(in.tellg() - header_end);
  in.seekg(header_end);
  if (k != 0 && n > available / sizeof(double) / k) {
    throw format_error("truncated embedding payload" + where);
  }
  if (available != n * k * sizeof(double)) {
    throw format_error("embedding payload size does not match header" + where);
  }
  embedding_matrix z(n, static_cast<class_id>(k));
  if (!detail::read_le(in, z.values())) throw format_error("truncated embedding payload" + where);
  return z;
}

}  // namespace gee
