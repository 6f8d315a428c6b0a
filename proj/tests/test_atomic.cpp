#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "gee/atomic.hpp"
#include "gee/encoder.hpp"
#include "race_graph.hpp"

using namespace gee;

TEST_CASE("write_add never loses an increment") {
  double cell = 0.0;
  const int per_thread = 200000;
#pragma omp parallel num_threads(8)
  for (int i = 0; i < per_thread; ++i) write_add(&cell, 1.0);
  // Integers below 2^53 are exact, so any lost update shows up.
  CHECK(cell == 8.0 * per_thread);
}

TEST_CASE("write_add on distinct cells") {
  std::vector<double> cells(64, 0.0);
#pragma omp parallel for num_threads(8)
  for (int i = 0; i < 64 * 1000; ++i) write_add(&cells[i % 64], 0.5);
  for (double c : cells) CHECK(c == 500.0);
}

TEST_CASE("two-hub contention graph matches the serial pass") {
  const node_id shared = 20000;
  const edge_list el = test::two_hub_graph(shared);
  const label_vector y = test::two_hub_labels(shared);
  const embedding_matrix serial = embed_serial(el, y);
  const csr_graph g = build_csr(el);
  for (int rep = 0; rep < 10; ++rep) {
    const embedding_matrix z = embed_parallel(g, arc_update::both_endpoints, y, {8, true, 1});
    double worst = 0.0;
    for (std::size_t i = 0; i < z.values().size(); ++i) {
      worst = std::max(worst, std::abs(z.values()[i] - serial.values()[i]));
    }
    REQUIRE(worst <= 1e-9);
  }
}

TEST_CASE("unsafe mode computes the same values single-threaded") {
  const edge_list el = test::two_hub_graph(1000);
  const label_vector y = test::two_hub_labels(1000);
  const embedding_matrix serial = embed_serial(el, y);
  const embedding_matrix z = embed_parallel(build_csr(el), arc_update::both_endpoints, y, {1, false});
  for (std::size_t i = 0; i < z.values().size(); ++i) {
    CHECK(std::abs(z.values()[i] - serial.values()[i]) <= 1e-12);
  }
}
