#pragma once

// Test-only reference computations. These deliberately use dense n x (K+1)
// matrices and literal loops, sharing no code with the library's kernels.

#include <algorithm>
#include <random>
#include <tuple>
#include <cstdint>
#include <vector>

#include "gee/graph.hpp"
#include "gee/labeling.hpp"

namespace gee::oracle {

struct dense {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;
  dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// W with an explicit all-zero column 0 for unknown labels. For each class,
// scan every node, count members, then write 1/count into their rows.
inline dense projection(const std::vector<class_id>& y, class_id k) {
  dense w(y.size(), static_cast<std::size_t>(k) + 1);
  for (class_id c = 1; c <= k; ++c) {
    std::size_t count = 0;
    for (class_id l : y) count += (l == c);
    if (count == 0) continue;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == c) w(i, c) = 1.0 / static_cast<double>(count);
    }
  }
  return w;
}

// Literal edge pass into an n x (K+1) matrix; column 0 absorbs (zero)
// contributions from unlabeled endpoints and is dropped on return.
inline dense embedding(const edge_list& el, const std::vector<class_id>& y, class_id k) {
  const dense w = projection(y, k);
  dense z(el.n, static_cast<std::size_t>(k) + 1);
  for (const edge& e : el.edges) {
    z(e.u, y[e.v]) += w(e.v, y[e.v]) * e.w;
    z(e.v, y[e.u]) += w(e.u, y[e.u]) * e.w;
  }
  dense out(el.n, static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < el.n; ++i) {
    for (class_id c = 1; c <= k; ++c) out(i, c - 1) = z(i, c);
  }
  return out;
}

// Sum over edges of w * W(v, Y(v)) + w * W(u, Y(u)).
inline double mass(const edge_list& el, const std::vector<class_id>& y, class_id k) {
  const dense w = projection(y, k);
  long double total = 0.0L;
  for (const edge& e : el.edges) {
    total += static_cast<long double>(e.w) * w(e.v, y[e.v]);
    total += static_cast<long double>(e.w) * w(e.u, y[e.u]);
  }
  return static_cast<double>(total);
}

// Sorted (u, v, w) multiset of a CSR's arcs.
inline std::vector<edge> arcs_sorted(const csr_graph& g) {
  std::vector<edge> out;
  for (std::uint64_t u = 0; u < g.n; ++u) {
    for (arc_index a = g.offsets[u]; a < g.offsets[u + 1]; ++a) {
      out.push_back({static_cast<node_id>(u), g.targets[a], g.weights[a]});
    }
  }
  auto key = [](const edge& e) { return std::tuple(e.u, e.v, e.w); };
  std::sort(out.begin(), out.end(), [&](const edge& a, const edge& b) { return key(a) < key(b); });
  return out;
}

// Random weighted multigraph for property tests.
template <class Rng>
edge_list random_graph(Rng& rng, std::uint64_t n, std::size_t s, bool directed) {
  std::uniform_int_distribution<std::uint64_t> node(0, n - 1);
  std::uniform_real_distribution<double> weight(0.0, 2.0);
  edge_list el;
  el.n = n;
  el.directed = directed;
  for (std::size_t i = 0; i < s; ++i) {
    double w = weight(rng);
    if (w == 0.0) w = 2.0;  // weights in (0, 2]
    el.edges.push_back({static_cast<node_id>(node(rng)), static_cast<node_id>(node(rng)), w});
  }
  return el;
}

}  // namespace gee::oracle
