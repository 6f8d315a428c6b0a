#pragma once

#include "gee/graph.hpp"
#include "gee/labeling.hpp"

namespace gee::test {

// Two same-class hubs sharing `shared` neighbours, stored directed so every
// arc carries both updates. Arcs h1 -> x write Z(x, 1) from h1's worker while
// arcs x -> h2 write the same Z(x, 1) from x's worker, and every x -> h2 arc
// also hits Z(h2, 1) from a different worker.
inline edge_list two_hub_graph(node_id shared) {
  const node_id h1 = 0, h2 = 1;
  edge_list el;
  el.n = static_cast<std::uint64_t>(shared) + 2;
  el.directed = true;
  el.edges.reserve(2 * static_cast<std::size_t>(shared));
  for (node_id x = 2; x < shared + 2; ++x) {
    el.edges.push_back({h1, x, 1.0});
    el.edges.push_back({x, h2, 1.0});
  }
  return el;
}

inline label_vector two_hub_labels(node_id shared) {
  return label_vector{std::vector<class_id>(static_cast<std::size_t>(shared) + 2, 1), 1};
}

}  // namespace gee::test
