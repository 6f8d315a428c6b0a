#include "gee/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <ranges>
#include <sstream>
#include <string>

#include "gee/errors.hpp"

namespace gee {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::int64_t parse_int(std::string_view field, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw parse_error(line_no, "expected integer, got '" + std::string(field) + "'");
  }
  return value;
}

class_id checked_label(std::int64_t label, std::uint64_t node, class_id k) {
  if (label < 0 || label > k) {
    throw validation_error("label " + std::to_string(label) + " of node " + std::to_string(node) +
                           " outside [0, " + std::to_string(k) + "]");
  }
  return static_cast<class_id>(label);
}

}  // namespace

bool label_vector::any_labeled() const noexcept {
  return std::ranges::any_of(labels, [](class_id c) { return c != 0; });
}

label_vector parse_labels(std::string_view text, std::uint64_t n, class_id k) {
  if (k < 1) throw contract_error("class count k must be >= 1");
  label_vector y{std::vector<class_id>(n, 0), k};

  enum class layout { unknown, per_line, pairs } mode = layout::unknown;
  std::uint64_t next_node = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::string_view fields[2];
    std::size_t count = 0;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && is_blank(line[i])) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      if (count < 2) fields[count] = line.substr(i, j - i);
      ++count;
      i = j;
    }
    if (count == 0 || fields[0].front() == '#') continue;
    if (count > 2) throw parse_error(line_no, "expected 'label' or 'node label'");

    const layout this_line = count == 1 ? layout::per_line : layout::pairs;
    if (mode == layout::unknown) mode = this_line;
    if (mode != this_line) throw parse_error(line_no, "mixed label file layouts");

    if (mode == layout::per_line) {
      if (next_node >= n) {
        throw validation_error("label file lists more than n = " + std::to_string(n) + " nodes");
      }
      y.labels[next_node] = checked_label(parse_int(fields[0], line_no), next_node, k);
      ++next_node;
    } else {
      const std::int64_t node = parse_int(fields[0], line_no);
      if (node < 0 || static_cast<std::uint64_t>(node) >= n) {
        throw validation_error("node id " + std::to_string(node) + " outside [0, " +
                               std::to_string(n) + ")");
      }
      y.labels[node] = checked_label(parse_int(fields[1], line_no), node, k);
    }
  }
  return y;
}

label_vector load_labels(const std::filesystem::path& path, std::uint64_t n, class_id k) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_labels(buf.str(), n, k);
}

void write_labels(const label_vector& y, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
  std::string text;
  text.reserve(y.labels.size() * 2);
  for (class_id c : y.labels) {
    text += std::to_string(c);
    text += '\n';
  }
  out << text;
  if (!out) throw io_error("write failed on '" + path.string() + "'");
}

label_vector random_labels(std::uint64_t n, class_id k, double fraction, std::uint64_t seed) {
  if (n < 1) throw contract_error("random_labels: n must be >= 1");
  if (k < 1) throw contract_error("random_labels: k must be >= 1");
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw contract_error("random_labels: fraction must lie in [0, 1]");
  }
  const auto labeled = static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(n)));

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> chosen(labeled);
  auto nodes = std::views::iota(std::uint64_t{0}, n);
  std::sample(nodes.begin(), nodes.end(), chosen.begin(), static_cast<std::ptrdiff_t>(labeled), rng);

  label_vector y{std::vector<class_id>(n, 0), k};
  std::uniform_int_distribution<class_id> pick(1, k);
  for (std::uint64_t node : chosen) y.labels[node] = pick(rng);
  return y;
}

std::vector<std::uint64_t> class_counts(const label_vector& y) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(y.k), 0);
  for (class_id c : y.labels) {
    if (c > 0) ++counts[c - 1];
  }
  return counts;
}

void validate(const label_vector& y) {
  if (y.k < 1) throw validation_error("class count k must be >= 1");
  for (std::size_t i = 0; i < y.labels.size(); ++i) {
    checked_label(y.labels[i], i, y.k);
  }
}

}  // namespace gee
