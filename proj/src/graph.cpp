#include "gee/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "gee/errors.hpp"

namespace gee {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits a line into whitespace-separated fields without allocating.
std::size_t split_fields(std::string_view line, std::string_view* out, std::size_t max_fields) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    if (count < max_fields) out[count] = line.substr(i, j - i);
    ++count;
    i = j;
  }
  return count;
}

node_id parse_node(std::string_view field, std::size_t line_no) {
  if (!field.empty() && field.front() == '-') {
    throw parse_error(line_no, "negative node id '" + std::string(field) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec == std::errc::result_out_of_range ||
      (ec == std::errc() && value > std::numeric_limits<node_id>::max())) {
    throw parse_error(line_no, "node id out of range '" + std::string(field) + "'");
  }
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw parse_error(line_no, "expected integer node id, got '" + std::string(field) + "'");
  }
  return static_cast<node_id>(value);
}

double parse_weight(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw parse_error(line_no, "expected real weight, got '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw parse_error(line_no, "non-finite weight '" + std::string(field) + "'");
  }
  return value;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error("read failed on '" + path.string() + "'");
  return std::move(buf).str();
}

}  // namespace

edge_list parse_edge_list(std::string_view text, bool weighted, bool directed) {
  edge_list el;
  el.directed = directed;
  std::uint64_t max_id = 0;
  bool any = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::string_view fields[3];
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    const std::size_t count = split_fields(line, fields, 3);
    if (count < 2) throw parse_error(line_no, "expected 'u v' or 'u v w'");
    if (count > 3) throw parse_error(line_no, "too many fields");
    if (weighted && count != 3) throw parse_error(line_no, "missing weight");

    edge e{parse_node(fields[0], line_no), parse_node(fields[1], line_no), 1.0};
    if (weighted) e.w = parse_weight(fields[2], line_no);
    max_id = std::max<std::uint64_t>(max_id, std::max(e.u, e.v));
    any = true;
    el.edges.push_back(e);
  }
  el.n = any ? max_id + 1 : 0;
  return el;
}

edge_list load_edge_list(const std::filesystem::path& path, bool weighted, bool directed) {
  return parse_edge_list(read_file(path), weighted, directed);
}

void write_edge_list(const edge_list& el, const std::filesystem::path& path, bool with_weights) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
  std::string line;
  char buf[32];
  for (const edge& e : el.edges) {
    line.clear();
    line += std::to_string(e.u);
    line += ' ';
    line += std::to_string(e.v);
    if (with_weights) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.w);
      line += ' ';
      line.append(buf, ptr);
    }
    line += '\n';
    out << line;
  }
  if (!out) throw io_error("write failed on '" + path.string() + "'");
}

void validate(const edge_list& el) {
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    const edge& e = el.edges[i];
    if (e.u >= el.n || e.v >= el.n) {
      throw contract_error("edge " + std::to_string(i) + " has endpoint >= n");
    }
    if (!std::isfinite(e.w)) throw contract_error("edge " + std::to_string(i) + " has non-finite weight");
  }
}

void validate(const csr_graph& g) {
  if (g.offsets.size() != g.n + 1) throw contract_error("offsets length != n + 1");
  if (g.offsets.front() != 0) throw contract_error("offsets[0] != 0");
  if (g.offsets.back() != g.targets.size()) throw contract_error("offsets[n] != arc count");
  if (g.weights.size() != g.targets.size()) throw contract_error("weights length != arc count");
  if (!std::is_sorted(g.offsets.begin(), g.offsets.end())) {
    throw contract_error("offsets not nondecreasing");
  }
  for (node_id t : g.targets) {
    if (t >= g.n) throw contract_error("arc target >= n");
  }
  for (double w : g.weights) {
    if (!std::isfinite(w)) throw contract_error("non-finite arc weight");
  }
}

csr_graph build_csr(const edge_list& el) {
  validate(el);
  csr_graph g;
  g.n = el.n;
  g.directed = el.directed;
  g.offsets.assign(el.n + 1, 0);

  for (const edge& e : el.edges) {
    ++g.offsets[e.u + 1];
    if (!el.directed) ++g.offsets[e.v + 1];
  }
  for (std::uint64_t i = 0; i < el.n; ++i) g.offsets[i + 1] += g.offsets[i];

  const arc_index arcs = g.offsets[el.n];
  g.targets.resize(arcs);
  g.weights.resize(arcs);
  std::vector<arc_index> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const edge& e : el.edges) {
    arc_index a = cursor[e.u]++;
    g.targets[a] = e.v;
    g.weights[a] = e.w;
    if (!el.directed) {
      a = cursor[e.v]++;
      g.targets[a] = e.u;
      g.weights[a] = e.w;
    }
  }
  return g;
}

edge_list edge_list_from_csr(const csr_graph& g) {
  edge_list el;
  el.n = g.n;
  el.directed = g.directed;
  el.edges.reserve(g.directed ? g.num_arcs() : g.num_arcs() / 2);
  for (std::uint64_t u = 0; u < g.n; ++u) {
    const auto nbrs = g.neighbors(static_cast<node_id>(u));
    const auto ws = g.arc_weights(static_cast<node_id>(u));
    bool skip_loop = false;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const node_id v = nbrs[i];
      if (g.directed || u < v) {
        el.edges.push_back({static_cast<node_id>(u), v, ws[i]});
      } else if (u == v) {
        // A symmetric self-loop is stored twice in a row; keep every other copy.
        if (!skip_loop) el.edges.push_back({static_cast<node_id>(u), v, ws[i]});
        skip_loop = !skip_loop;
      }
    }
  }
  return el;
}

edge_list generate_erdos_renyi(std::uint64_t n, std::uint64_t s, std::uint64_t seed) {
  if (n < 1) throw contract_error("generate_erdos_renyi: n must be >= 1");
  if (n - 1 > std::numeric_limits<node_id>::max()) {
    throw contract_error("generate_erdos_renyi: n exceeds node id range");
  }
  edge_list el;
  el.n = n;
  el.directed = true;
  el.edges.resize(s);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (edge& e : el.edges) {
    e.u = static_cast<node_id>(pick(rng));
    e.v = static_cast<node_id>(pick(rng));
    e.w = 1.0;
  }
  return el;
}

}  // namespace gee
