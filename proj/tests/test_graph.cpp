#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "gee/errors.hpp"
#include "gee/graph.hpp"
#include "oracle.hpp"
#include "temp_dir.hpp"

using namespace gee;

TEST_CASE("load_edge_list skips comments and assigns unit weights") {
  test::temp_dir dir;
  const auto p = dir.write("g.txt", "# c\n0 1\n1 2\n");
  const edge_list el = load_edge_list(p, false, true);
  CHECK(el.n == 3);
  REQUIRE(el.size() == 2);
  CHECK(el.edges[0] == edge{0, 1, 1.0});
  CHECK(el.edges[1] == edge{1, 2, 1.0});
}

TEST_CASE("load_edge_list reads weights") {
  test::temp_dir dir;
  const edge_list el = load_edge_list(dir.write("g.txt", "0 1 2.5\n"), true, true);
  CHECK(el.n == 2);
  REQUIRE(el.size() == 1);
  CHECK(el.edges[0] == edge{0, 1, 2.5});
}

TEST_CASE("load_edge_list reports the failing line") {
  test::temp_dir dir;
  try {
    load_edge_list(dir.write("g.txt", "0 x\n"), false, true);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 1);
  }
  try {
    parse_edge_list("# header\n0 1\n\n2 -3\n", false, true);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("edge list parser edge cases") {
  CHECK(parse_edge_list("", false, true).n == 0);
  CHECK(parse_edge_list("# only a comment\n\n", false, true).size() == 0);
  // Tabs, CRLF and runs of spaces are all separators.
  const edge_list el = parse_edge_list("3\t\t7\r\n  1   0  \n", false, false);
  CHECK(el.n == 8);
  CHECK(el.edges[0] == edge{3, 7, 1.0});
  CHECK_FALSE(el.directed);

  CHECK_THROWS_AS(parse_edge_list("0 1 inf\n", true, true), parse_error);
  CHECK_THROWS_AS(parse_edge_list("0 1 nan\n", true, true), parse_error);
  CHECK_THROWS_AS(parse_edge_list("0 1\n", true, true), parse_error);
  CHECK_THROWS_AS(parse_edge_list("0\n", false, true), parse_error);
  CHECK_THROWS_AS(parse_edge_list("0 1 2 3\n", false, true), parse_error);
  CHECK_THROWS_AS(parse_edge_list("0 1.5\n", false, true), parse_error);
  CHECK_THROWS_AS(parse_edge_list("0 99999999999\n", false, true), parse_error);
  CHECK_THROWS_AS(load_edge_list("/nonexistent/graph.txt", false, true), io_error);
}

TEST_CASE("build_csr on the 3-node chain") {
  edge_list el{3, {{0, 1, 1.0}, {1, 2, 1.0}}, true};
  SUBCASE("directed") {
    const csr_graph g = build_csr(el);
    CHECK(g.offsets == std::vector<arc_index>{0, 1, 2, 2});
    CHECK(g.targets == std::vector<node_id>{1, 2});
  }
  SUBCASE("undirected mirrors every edge") {
    el.directed = false;
    const csr_graph g = build_csr(el);
    CHECK(g.offsets == std::vector<arc_index>{0, 1, 3, 4});
    CHECK(g.targets == std::vector<node_id>{1, 0, 2, 1});
    CHECK_FALSE(g.directed);
  }
}

TEST_CASE("build_csr on the empty graph") {
  const csr_graph g = build_csr(edge_list{});
  CHECK(g.offsets == std::vector<arc_index>{0});
  CHECK(g.targets.empty());
  CHECK_NOTHROW(validate(g));
}

TEST_CASE("build_csr rejects endpoints outside n") {
  edge_list el{2, {{0, 2, 1.0}}, true};
  CHECK_THROWS_AS(build_csr(el), contract_error);
}

TEST_CASE("build_csr arc multiset equals edge multiset or its symmetric closure") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t n = 1 + rng() % 60;
    const bool directed = trial % 2 == 0;
    const edge_list el = oracle::random_graph(rng, n, rng() % 300, directed);
    const csr_graph g = build_csr(el);
    CHECK_NOTHROW(validate(g));

    std::vector<edge> expected;
    for (const edge& e : el.edges) {
      expected.push_back(e);
      if (!directed) expected.push_back({e.v, e.u, e.w});
    }
    auto key = [](const edge& e) { return std::tuple(e.u, e.v, e.w); };
    std::sort(expected.begin(), expected.end(),
              [&](const edge& a, const edge& b) { return key(a) < key(b); });
    CHECK(oracle::arcs_sorted(g) == expected);

    // Arcs of a node keep input order.
    std::vector<std::vector<node_id>> by_source(n);
    for (const edge& e : el.edges) {
      by_source[e.u].push_back(e.v);
      if (!directed) by_source[e.v].push_back(e.u);
    }
    for (std::uint64_t u = 0; u < n; ++u) {
      const auto nb = g.neighbors(static_cast<node_id>(u));
      CHECK(std::vector<node_id>(nb.begin(), nb.end()) == by_source[u]);
    }

    // edge_list_from_csr recovers the same multiset.
    const csr_graph again = build_csr(edge_list_from_csr(g));
    CHECK(oracle::arcs_sorted(again) == oracle::arcs_sorted(g));
  }
}

TEST_CASE("generate_erdos_renyi") {
  CHECK(generate_erdos_renyi(10, 0, 7).size() == 0);

  const edge_list loops = generate_erdos_renyi(1, 5, 1);
  REQUIRE(loops.size() == 5);
  for (const edge& e : loops.edges) CHECK(e == edge{0, 0, 1.0});

  CHECK(generate_erdos_renyi(50, 1000, 3).edges == generate_erdos_renyi(50, 1000, 3).edges);
  CHECK(generate_erdos_renyi(50, 1000, 3).edges != generate_erdos_renyi(50, 1000, 4).edges);
  CHECK_THROWS_AS(generate_erdos_renyi(0, 1, 1), contract_error);
}

TEST_CASE("generate_erdos_renyi endpoints are uniform") {
  // Uniform on [0, n): mean (n-1)/2, variance (n^2-1)/12. 2s endpoint draws.
  const std::uint64_t n = 1000, s = 100000;
  const edge_list el = generate_erdos_renyi(n, s, 42);
  double sum = 0.0;
  for (const edge& e : el.edges) sum += e.u + e.v;
  const double draws = 2.0 * s;
  const double mean = sum / draws;
  const double se = std::sqrt((double(n) * n - 1) / 12.0 / draws);
  CHECK(std::abs(mean - 499.5) <= 3 * se);
  CHECK(el.n == n);
  for (const edge& e : el.edges) {
    REQUIRE(e.u < n);
    REQUIRE(e.v < n);
  }
}

TEST_CASE("binary cache round-trips") {
  test::temp_dir dir;
  std::mt19937_64 rng(5);
  std::vector<csr_graph> graphs{build_csr(edge_list{3, {{0, 1, 1.0}, {1, 2, 1.0}}, true}),
                                build_csr(edge_list{}),
                                build_csr(oracle::random_graph(rng, 100, 500, false))};
  for (const csr_graph& g : graphs) {
    const auto p = dir / "g.bin";
    write_binary_cache(g, p);
    CHECK(is_binary_cache(p));
    CHECK(read_binary_cache(p) == g);
  }
}

TEST_CASE("binary cache header layout is little-endian") {
  test::temp_dir dir;
  const auto p = dir / "g.bin";
  write_binary_cache(build_csr(edge_list{3, {{0, 1, 1.0}, {1, 2, 1.0}}, true}), p);
  std::ifstream in(p, std::ios::binary);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), {});
  // magic(8) version(1) n(8) arcs(8) directed(1) offsets(4*8) targets(2*4) weights(2*8)
  REQUIRE(bytes.size() == 8 + 1 + 8 + 8 + 1 + 32 + 8 + 16);
  CHECK(std::string(bytes.begin(), bytes.begin() + 7) == "GEECSR1");
  CHECK(bytes[7] == 0);
  CHECK(bytes[8] == 1);
  CHECK(bytes[9] == 3);
  CHECK(bytes[17] == 2);
  CHECK(bytes[25] == 1);
}

TEST_CASE("binary cache rejects bad magic, version and truncation") {
  test::temp_dir dir;
  CHECK_THROWS_AS(read_binary_cache(dir.write("bad.bin", "NOTACSR\0 more bytes here")), format_error);
  CHECK_FALSE(is_binary_cache(dir / "bad.bin"));

  const auto p = dir / "g.bin";
  write_binary_cache(build_csr(edge_list{3, {{0, 1, 1.0}, {1, 2, 1.0}}, true}), p);
  std::ifstream in(p, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(in)), {});

  std::string wrong_version = bytes;
  wrong_version[8] = 9;
  CHECK_THROWS_AS(read_binary_cache(dir.write("v.bin", wrong_version)), format_error);
  CHECK_THROWS_AS(read_binary_cache(dir.write("t.bin", bytes.substr(0, bytes.size() - 3))),
                  format_error);
  CHECK_THROWS_AS(read_binary_cache(dir.write("h.bin", bytes.substr(0, 12))), format_error);
  CHECK_THROWS_AS(read_binary_cache(dir / "missing.bin"), io_error);
}
