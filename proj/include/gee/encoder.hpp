#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <memory>
#include <vector>

#include "gee/graph.hpp"
#include "gee/labeling.hpp"

namespace gee {

/// The n x K projection W. Only W(i, Y(i)) can be nonzero, so it is stored as
/// one scalar per node next to the node's label.
class projection_matrix {
 public:
  projection_matrix() = default;
  projection_matrix(std::vector<class_id> labels, class_id k, std::vector<double> scale);

  std::uint64_t rows() const noexcept { return labels_.size(); }
  class_id cols() const noexcept { return k_; }

  /// Label of node i (0 = unknown) and its single nonzero W(i, label(i)).
  class_id label(std::uint64_t i) const noexcept { return labels_[i]; }
  double scale(std::uint64_t i) const noexcept { return scale_[i]; }

  /// Dense view of entry (i, c) for c in 1..K.
  double at(std::uint64_t i, class_id c) const noexcept {
    return labels_[i] == c ? scale_[i] : 0.0;
  }

  const std::vector<class_id>& labels() const noexcept { return labels_; }
  const std::vector<double>& scales() const noexcept { return scale_; }

  friend bool operator==(const projection_matrix&, const projection_matrix&) = default;

 private:
  std::vector<class_id> labels_;
  class_id k_ = 0;
  std::vector<double> scale_;
};

/// W(i, c) = 1 / count(Y = c) for every node labeled c. Empty classes produce
/// no nonzeros and a warning.
projection_matrix build_projection(const label_vector& y);

/// Same result as build_projection, with the counting and fill spread over
/// `workers` threads.
projection_matrix build_projection_parallel(const label_vector& y, int workers);

namespace detail {

// Leaves trivially constructible elements uninitialized on resize so a large
// buffer can be first-touched by the threads that will use it.
template <class T>
struct default_init_allocator : std::allocator<T> {
  template <class U>
  struct rebind {
    using other = default_init_allocator<U>;
  };
  using std::allocator<T>::allocator;

  template <class U>
  void construct(U* p) noexcept {
    ::new (static_cast<void*>(p)) U;
  }
  template <class U, class... Args>
  void construct(U* p, Args&&... args) {
    ::new (static_cast<void*>(p)) U(std::forward<Args>(args)...);
  }
};

}  // namespace detail

/// Dense row-major n x K embedding Z. Column c of the math (1-based class id)
/// is stored at index c - 1.
class embedding_matrix {
 public:
  embedding_matrix() = default;
  embedding_matrix(std::uint64_t n, class_id k) : n_(n), k_(k), values_(n * k, 0.0) {}

  /// Zero matrix whose pages are first touched by `workers` threads.
  static embedding_matrix zeros_parallel(std::uint64_t n, class_id k, int workers);

  std::uint64_t rows() const noexcept { return n_; }
  class_id cols() const noexcept { return k_; }

  double& operator()(std::uint64_t i, std::size_t j) noexcept { return values_[i * k_ + j]; }
  double operator()(std::uint64_t i, std::size_t j) const noexcept { return values_[i * k_ + j]; }

  std::span<double> row(std::uint64_t i) noexcept { return {values_.data() + i * k_, static_cast<std::size_t>(k_)}; }
  std::span<const double> row(std::uint64_t i) const noexcept {
    return {values_.data() + i * k_, static_cast<std::size_t>(k_)};
  }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const embedding_matrix&, const embedding_matrix&) = default;

 private:
  std::uint64_t n_ = 0;
  class_id k_ = 0;
  std::vector<double, detail::default_init_allocator<double>> values_;
};

/// Reference pass: for each listed edge (u, v, w), in order,
///   Z(u, Y(v)) += W(v, Y(v)) * w   and   Z(v, Y(u)) += W(u, Y(u)) * w,
/// skipping updates whose source label is unknown. Bitwise deterministic.
embedding_matrix embed_serial(const edge_list& el, const label_vector& y);
embedding_matrix embed_serial(const edge_list& el, const projection_matrix& w);

/// Which updates one stored arc (u -> v) performs in the parallel pass.
enum class arc_update {
  both_endpoints,  // Z(u, Y(v)) and Z(v, Y(u)); one arc per listed edge
  source_only,     // Z(u, Y(v)) only; the mirror arc (v -> u) supplies the other
};

/// Picks the per-arc rule that makes the arc pass reproduce embed_serial on the
/// originating edge list: directed inputs carry both updates per arc, symmetric
/// storage of an undirected list carries only the source-side one.
arc_update edge_accounting(const csr_graph& g, bool directed);

struct parallel_options {
  int workers = 1;
  bool atomics = true;
  /// Nodes per dynamically scheduled chunk.
  int chunk = 256;
};

/// Edge-map pass over every node (full frontier). One worker walks a node's arc
/// range sequentially; nodes are handed out in dynamic chunks. With atomics,
/// every Z increment goes through write_add.
embedding_matrix embed_parallel(const csr_graph& g, arc_update rule, const label_vector& y,
                                const parallel_options& opts);
embedding_matrix embed_parallel(const csr_graph& g, arc_update rule, const projection_matrix& w,
                                const parallel_options& opts);

enum class embedding_format { csv, binary };

// Binary layout (little-endian): "GEEEMB1\0" | u64 n | u64 k | f64 values[n*k]
inline constexpr char embedding_magic[8] = {'G', 'E', 'E', 'E', 'M', 'B', '1', '\0'};

void write_embedding(const embedding_matrix& z, const std::filesystem::path& path,
                     embedding_format format);
embedding_matrix read_embedding(const std::filesystem::path& path, embedding_format format);

}  // namespace gee
