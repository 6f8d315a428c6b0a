#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gee/encoder.hpp"
#include "gee/graph.hpp"
#include "gee/labeling.hpp"

namespace gee::bench {

enum class experiment { strong_scaling, edge_sweep };

struct bench_result {
  experiment kind = experiment::strong_scaling;
  std::string graph;
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  class_id k = 0;
  int workers = 1;
  bool atomics = true;
  /// Median of rep_seconds.
  double median_s = 0.0;
  int reps = 0;
  std::vector<double> rep_seconds;
  /// Projection build time, measured once outside the embedding timer.
  double projection_s = 0.0;
};

struct scaling_config {
  std::vector<int> worker_counts{1};
  int reps = 3;
  bool atomics = true;
  std::string graph_name = "graph";
};

/// Times embed_parallel alone for each worker count (one warm-up, then `reps`
/// timed runs). Throws contract_error if reps < 3 or a worker count is < 1.
std::vector<bench_result> run_strong_scaling(const csr_graph& g, arc_update rule,
                                             const label_vector& y, const scaling_config& cfg);

struct atomics_comparison {
  bench_result atomic;
  bench_result unsafe;
  /// unsafe.median_s / atomic.median_s
  double ratio = 0.0;
};

/// Times embed_parallel with and without atomic accumulation at one worker
/// count, alternating the two modes rep by rep so both see the same machine
/// state. Throws contract_error if reps < 3 or workers < 1.
atomics_comparison compare_atomics(const csr_graph& g, arc_update rule, const label_vector& y,
                                   int workers, int reps, const std::string& graph_name = "graph");

struct sweep_config {
  std::vector<std::uint64_t> sizes;
  double n_per_s = 0.05;
  class_id k = 50;
  double label_fraction = 0.1;
  int workers = 1;
  std::uint64_t seed = 1;
  int reps = 3;
};

/// For each edge count s, generates G(round(n_per_s * s), s) and random labels,
/// then times embed_parallel. Throws contract_error on empty or non-increasing
/// sizes, or reps < 3.
std::vector<bench_result> run_edge_sweep(const sweep_config& cfg);

/// time(first result) / time(each result); the first entry is the baseline.
std::vector<double> speedups(const std::vector<bench_result>& results);

struct linear_fit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
linear_fit fit_line(const std::vector<double>& x, const std::vector<double>& y);

double median(std::vector<double> xs);

/// Writes out_dir/results.csv and, when matching results exist,
/// speedup_vs_workers.svg and time_vs_edges.svg. Throws io_error.
void emit_report(const std::vector<bench_result>& results, const std::filesystem::path& out_dir);

/// Column order of results.csv.
inline constexpr const char* csv_header = "name,n,s,k,workers,atomics,median_s,reps,hw_threads";

}  // namespace gee::bench
