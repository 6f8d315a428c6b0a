// Times the serial reference pass against the parallel edge-map kernel on a
// generated Erdos-Renyi graph: serial, parallel on one worker, parallel on N
// workers with and without atomic accumulation.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "gee/bench.hpp"
#include "gee/encoder.hpp"
#include "gee/graph.hpp"
#include "gee/labeling.hpp"

namespace {

template <class F>
double median_seconds(int reps, F&& f) {
  f();  // warm-up
  std::vector<double> ts;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    ts.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return gee::bench::median(ts);
}

double max_abs_diff(const gee::embedding_matrix& a, const gee::embedding_matrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  }
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel GEE kernels"};
  std::uint64_t edges = 4'000'000, seed = 7;
  double n_per_s = 0.05, fraction = 0.1;
  int k = 50, reps = 5;
  int workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--edges", edges, "Edge count");
  app.add_option("--n-per-s", n_per_s, "Nodes per edge");
  app.add_option("--k", k, "Classes");
  app.add_option("--fraction", fraction, "Labeled fraction");
  app.add_option("--workers", workers, "Parallel worker count");
  app.add_option("--reps", reps, "Timed repetitions")->check(CLI::Range(3, 1000));
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  const auto n = std::max<std::uint64_t>(1, std::llround(n_per_s * static_cast<double>(edges)));
  const gee::edge_list el = gee::generate_erdos_renyi(n, edges, seed);
  const gee::csr_graph g = gee::build_csr(el);
  const gee::label_vector y = gee::random_labels(n, k, fraction, seed + 1);
  const gee::projection_matrix w = gee::build_projection(y);

  gee::embedding_matrix reference;
  const double t_serial = median_seconds(reps, [&] { reference = gee::embed_serial(el, w); });

  auto parallel = [&](int wk, bool atomics) {
    gee::parallel_options opts;
    opts.workers = wk;
    opts.atomics = atomics;
    gee::embedding_matrix z;
    const double t = median_seconds(reps, [&] {
      z = gee::embed_parallel(g, gee::arc_update::both_endpoints, w, opts);
    });
    return std::pair{t, max_abs_diff(z, reference)};
  };

  std::printf("graph: n=%llu s=%llu k=%d hw_threads=%u\n", static_cast<unsigned long long>(n),
              static_cast<unsigned long long>(edges), k, std::thread::hardware_concurrency());
  std::printf("%-28s %12s %10s %14s\n", "kernel", "median_s", "vs serial", "max|dZ|");
  std::printf("%-28s %12.6f %10.2f %14s\n", "serial (edge list)", t_serial, 1.0, "-");

  const auto [t1, d1] = parallel(1, true);
  std::printf("%-28s %12.6f %10.2f %14.3g\n", "parallel workers=1", t1, t_serial / t1, d1);
  char label[64];
  if (workers != 1) {
    const auto [tn, dn] = parallel(workers, true);
    std::snprintf(label, sizeof label, "parallel workers=%d", workers);
    std::printf("%-28s %12.6f %10.2f %14.3g\n", label, tn, t_serial / tn, dn);
  }
  const auto [tu, du] = parallel(workers, false);
  std::snprintf(label, sizeof label, "parallel workers=%d unsafe", workers);
  std::printf("%-28s %12.6f %10.2f %14.3g\n", label, tu, t_serial / tu, du);
  return 0;
}
