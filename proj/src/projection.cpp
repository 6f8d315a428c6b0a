#include <omp.h>

#include <string>

#include "gee/encoder.hpp"
#include "gee/errors.hpp"
#include "gee/log.hpp"

namespace gee {

namespace {

void warn_empty_classes(const std::vector<std::uint64_t>& counts) {
  std::size_t empty = 0;
  for (std::uint64_t c : counts) empty += c == 0;
  if (empty == 0) return;
  std::string msg = std::to_string(empty) + " of " + std::to_string(counts.size()) +
                    " classes have no labeled nodes; their embedding columns stay zero";
  log::warn(msg);
}

void check(const label_vector& y) {
  if (y.k < 1) throw contract_error("class count k must be >= 1");
}

}  // namespace

projection_matrix::projection_matrix(std::vector<class_id> labels, class_id k,
                                     std::vector<double> scale)
    : labels_(std::move(labels)), k_(k), scale_(std::move(scale)) {
  if (labels_.size() != scale_.size()) throw contract_error("projection: labels/scale length mismatch");
}

projection_matrix build_projection(const label_vector& y) {
  check(y);
  validate(y);
  const std::vector<std::uint64_t> counts = class_counts(y);
  warn_empty_classes(counts);

  std::vector<double> scale(y.labels.size(), 0.0);
  for (std::size_t i = 0; i < y.labels.size(); ++i) {
    const class_id c = y.labels[i];
    if (c > 0) scale[i] = 1.0 / static_cast<double>(counts[c - 1]);
  }
  return projection_matrix(y.labels, y.k, std::move(scale));
}

projection_matrix build_projection_parallel(const label_vector& y, int workers) {
  check(y);
  if (workers < 1) throw contract_error("workers must be >= 1");
  validate(y);

  const auto n = static_cast<std::int64_t>(y.labels.size());
  const class_id k = y.k;
  const class_id* labels = y.labels.data();

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
  std::uint64_t* cnt = counts.data();
#pragma omp parallel for num_threads(workers) schedule(static) reduction(+ : cnt[:k])
  for (std::int64_t i = 0; i < n; ++i) {
    if (labels[i] > 0) ++cnt[labels[i] - 1];
  }
  warn_empty_classes(counts);

  std::vector<double> inverse(static_cast<std::size_t>(k), 0.0);
  for (class_id c = 0; c < k; ++c) {
    if (counts[c] > 0) inverse[c] = 1.0 / static_cast<double>(counts[c]);
  }

  std::vector<double> scale(y.labels.size());
  double* out = scale.data();
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = labels[i] > 0 ? inverse[labels[i] - 1] : 0.0;
  }
  return projection_matrix(y.labels, k, std::move(scale));
}

}  // namespace gee
