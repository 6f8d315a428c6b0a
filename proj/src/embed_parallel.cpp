#include <omp.h>

#include <string>

#include "gee/atomic.hpp"
#include "gee/encoder.hpp"
#include "gee/errors.hpp"

namespace gee {

namespace {

template <bool Atomic>
inline void accumulate(double* cell, double delta) noexcept {
  if constexpr (Atomic) {
    write_add(cell, delta);
  } else {
    unsafe_add(cell, delta);
  }
}

// Dense edge map with the whole vertex set as frontier. Row u of Z and W stay
// hot while u's arcs are walked; the v-side reads and writes are the scattered
// ones.
template <bool BothEndpoints, bool Atomic>
void edge_map_dense(const csr_graph& g, const projection_matrix& w, embedding_matrix& z,
                    const parallel_options& opts) {
  const auto n = static_cast<std::int64_t>(g.n);
  const std::size_t k = static_cast<std::size_t>(z.cols());
  const arc_index* offsets = g.offsets.data();
  const node_id* targets = g.targets.data();
  const double* weights = g.weights.data();
  const class_id* labels = w.labels().data();
  const double* scale = w.scales().data();
  double* out = z.values().data();

#pragma omp parallel for num_threads(opts.workers) schedule(dynamic, opts.chunk)
  for (std::int64_t u = 0; u < n; ++u) {
    const class_id yu = labels[u];
    const double wu = scale[u];
    double* zu = out + static_cast<std::size_t>(u) * k;
    for (arc_index a = offsets[u]; a < offsets[u + 1]; ++a) {
      const node_id v = targets[a];
      const double weight = weights[a];
      const class_id yv = labels[v];
      if (yv != 0) accumulate<Atomic>(zu + (yv - 1), scale[v] * weight);
      if constexpr (BothEndpoints) {
        if (yu != 0) accumulate<Atomic>(out + static_cast<std::size_t>(v) * k + (yu - 1), wu * weight);
      }
    }
  }
}

}  // namespace

embedding_matrix embedding_matrix::zeros_parallel(std::uint64_t n, class_id k, int workers) {
  embedding_matrix z;
  z.n_ = n;
  z.k_ = k;
  z.values_.resize(n * static_cast<std::uint64_t>(k));
  const auto total = static_cast<std::int64_t>(z.values_.size());
  double* data = z.values_.data();
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < total; ++i) data[i] = 0.0;
  return z;
}

arc_update edge_accounting(const csr_graph& g, bool directed) {
  if (directed) return arc_update::both_endpoints;
  if (g.directed) {
    throw contract_error(
        "edge_accounting: undirected accounting needs symmetric storage, but the graph was built "
        "from a directed edge list");
  }
  return arc_update::source_only;
}

embedding_matrix embed_parallel(const csr_graph& g, arc_update rule, const projection_matrix& w,
                                const parallel_options& opts) {
  if (g.n != w.rows()) {
    throw contract_error("embed_parallel: graph has n = " + std::to_string(g.n) +
                         " but labels cover " + std::to_string(w.rows()) + " nodes");
  }
  if (opts.workers < 1) throw contract_error("embed_parallel: workers must be >= 1");
  if (opts.chunk < 1) throw contract_error("embed_parallel: chunk must be >= 1");

  embedding_matrix z = embedding_matrix::zeros_parallel(g.n, w.cols(), opts.workers);
  const bool both = rule == arc_update::both_endpoints;
  if (both && opts.atomics) {
    edge_map_dense<true, true>(g, w, z, opts);
  } else if (both) {
    edge_map_dense<true, false>(g, w, z, opts);
  } else if (opts.atomics) {
    edge_map_dense<false, true>(g, w, z, opts);
  } else {
    edge_map_dense<false, false>(g, w, z, opts);
  }
  return z;
}

embedding_matrix embed_parallel(const csr_graph& g, arc_update rule, const label_vector& y,
                                const parallel_options& opts) {
  if (g.n != y.size()) {
    throw contract_error("embed_parallel: graph has n = " + std::to_string(g.n) +
                         " but labels cover " + std::to_string(y.size()) + " nodes");
  }
  if (opts.workers < 1) throw contract_error("embed_parallel: workers must be >= 1");
  return embed_parallel(g, rule, build_projection_parallel(y, opts.workers), opts);
}

}  // namespace gee
