#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace gee {

using class_id = std::int32_t;

/// Per-node class labels in {0, ..., k}; 0 means unknown.
struct label_vector {
  std::vector<class_id> labels;
  class_id k = 1;

  std::size_t size() const noexcept { return labels.size(); }
  bool any_labeled() const noexcept;
};

/// Reads either one label per line (line i labels node i) or "node label"
/// pairs, detected from the first data line. Unlisted nodes in pair format are 0.
label_vector load_labels(const std::filesystem::path& path, std::uint64_t n, class_id k);
label_vector parse_labels(std::string_view text, std::uint64_t n, class_id k);

/// One label per line, node order.
void write_labels(const label_vector& y, const std::filesystem::path& path);

/// Labels round(fraction * n) distinct nodes, chosen uniformly without
/// replacement, with classes drawn uniformly from {1, ..., k}.
label_vector random_labels(std::uint64_t n, class_id k, double fraction, std::uint64_t seed);

/// counts[c - 1] = number of nodes with label c. Unknown labels are not counted.
std::vector<std::uint64_t> class_counts(const label_vector& y);

/// Throws validation_error on any label outside [0, k].
void validate(const label_vector& y);

}  // namespace gee
