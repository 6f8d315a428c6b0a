#include "gee/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <thread>

#include "gee/errors.hpp"
#include "plot.hpp"

namespace gee::bench {

namespace {

using clock = std::chrono::steady_clock;

template <class F>
double seconds(F&& f) {
  const auto t0 = clock::now();
  f();
  const auto t1 = clock::now();
  // Timer resolution floor; reported times must stay positive.
  return std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
}

// Only the embed call sits inside the timer. The result is kept alive past the
// timer so deallocation is not measured either.
bench_result time_embedding(const csr_graph& g, arc_update rule, const label_vector& y,
                            const parallel_options& opts, int reps) {
  bench_result r;
  r.n = g.n;
  r.s = rule == arc_update::source_only ? g.num_arcs() / 2 : g.num_arcs();
  r.k = y.k;
  r.workers = opts.workers;
  r.atomics = opts.atomics;
  r.reps = reps;

  projection_matrix w;
  r.projection_s = seconds([&] { w = build_projection_parallel(y, opts.workers); });

  { embedding_matrix warm = embed_parallel(g, rule, w, opts); }
  for (int i = 0; i < reps; ++i) {
    embedding_matrix z;
    r.rep_seconds.push_back(seconds([&] { z = embed_parallel(g, rule, w, opts); }));
  }
  r.median_s = median(r.rep_seconds);
  return r;
}

}  // namespace

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  if (xs.size() % 2 == 1) return xs[mid];
  const double upper = xs[mid];
  const double lower = *std::max_element(xs.begin(), xs.begin() + mid);
  return 0.5 * (lower + upper);
}

std::vector<bench_result> run_strong_scaling(const csr_graph& g, arc_update rule,
                                             const label_vector& y, const scaling_config& cfg) {
  if (cfg.reps < 3) throw contract_error("run_strong_scaling: reps must be >= 3");
  if (cfg.worker_counts.empty()) throw contract_error("run_strong_scaling: no worker counts");
  for (int w : cfg.worker_counts) {
    if (w < 1) throw contract_error("run_strong_scaling: worker counts must be >= 1");
  }
  if (g.n != y.size()) throw contract_error("run_strong_scaling: label/graph size mismatch");

  std::vector<bench_result> out;
  for (int workers : cfg.worker_counts) {
    parallel_options opts;
    opts.workers = workers;
    opts.atomics = cfg.atomics;
    bench_result r = time_embedding(g, rule, y, opts, cfg.reps);
    r.kind = experiment::strong_scaling;
    r.graph = cfg.graph_name;
    out.push_back(std::move(r));
  }
  return out;
}

atomics_comparison compare_atomics(const csr_graph& g, arc_update rule, const label_vector& y,
                                   int workers, int reps, const std::string& graph_name) {
  if (reps < 3) throw contract_error("compare_atomics: reps must be >= 3");
  if (workers < 1) throw contract_error("compare_atomics: workers must be >= 1");
  if (g.n != y.size()) throw contract_error("compare_atomics: label/graph size mismatch");

  atomics_comparison out;
  projection_matrix w;
  const double projection_s = seconds([&] { w = build_projection_parallel(y, workers); });

  parallel_options on, off;
  on.workers = off.workers = workers;
  off.atomics = false;
  for (bench_result* r : {&out.atomic, &out.unsafe}) {
    r->kind = experiment::strong_scaling;
    r->graph = graph_name;
    r->n = g.n;
    r->s = rule == arc_update::source_only ? g.num_arcs() / 2 : g.num_arcs();
    r->k = y.k;
    r->workers = workers;
    r->reps = reps;
    r->projection_s = projection_s;
  }
  out.unsafe.atomics = false;

  { embedding_matrix warm = embed_parallel(g, rule, w, on); }
  { embedding_matrix warm = embed_parallel(g, rule, w, off); }
  for (int i = 0; i < reps; ++i) {
    embedding_matrix z;
    out.atomic.rep_seconds.push_back(seconds([&] { z = embed_parallel(g, rule, w, on); }));
    out.unsafe.rep_seconds.push_back(seconds([&] { z = embed_parallel(g, rule, w, off); }));
  }
  out.atomic.median_s = median(out.atomic.rep_seconds);
  out.unsafe.median_s = median(out.unsafe.rep_seconds);
  out.ratio = out.unsafe.median_s / out.atomic.median_s;
  return out;
}

std::vector<bench_result> run_edge_sweep(const sweep_config& cfg) {
  if (cfg.sizes.empty()) throw contract_error("run_edge_sweep: sizes must be nonempty");
  if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end(), std::less_equal<>())) {
    throw contract_error("run_edge_sweep: sizes must be strictly increasing");
  }
  if (cfg.reps < 3) throw contract_error("run_edge_sweep: reps must be >= 3");
  if (cfg.workers < 1) throw contract_error("run_edge_sweep: workers must be >= 1");
  if (!(cfg.n_per_s > 0.0)) throw contract_error("run_edge_sweep: n_per_s must be > 0");

  std::vector<bench_result> out;
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    const std::uint64_t s = cfg.sizes[i];
    const auto n = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::llround(cfg.n_per_s * static_cast<double>(s))));
    const csr_graph g = build_csr(generate_erdos_renyi(n, s, cfg.seed + i));
    const label_vector y = random_labels(n, cfg.k, cfg.label_fraction, cfg.seed + 1000 + i);

    parallel_options opts;
    opts.workers = cfg.workers;
    bench_result r = time_embedding(g, arc_update::both_endpoints, y, opts, cfg.reps);
    r.kind = experiment::edge_sweep;
    r.graph = "er-" + std::to_string(s);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<double> speedups(const std::vector<bench_result>& results) {
  std::vector<double> out;
  if (results.empty()) return out;
  double base = results.front().median_s;
  for (const bench_result& r : results) {
    if (r.workers == 1) {
      base = r.median_s;
      break;
    }
  }
  for (const bench_result& r : results) out.push_back(base / r.median_s);
  return out;
}

linear_fit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw contract_error("fit_line: need at least two paired points");
  }
  const double m = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw contract_error("fit_line: x values are all equal");
  linear_fit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += e * e;
  }
  fit.r2 = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

void emit_report(const std::vector<bench_result>& results, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw io_error("cannot create '" + out_dir.string() + "': " + ec.message());

  const auto csv_path = out_dir / "results.csv";
  std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
  if (!csv) throw io_error("cannot open '" + csv_path.string() + "' for writing");
  const unsigned hw = std::thread::hardware_concurrency();
  csv << csv_header << '\n';
  for (const bench_result& r : results) {
    csv << r.graph << ',' << r.n << ',' << r.s << ',' << r.k << ',' << r.workers << ','
        << (r.atomics ? 1 : 0) << ',' << r.median_s << ',' << r.reps << ',' << hw << '\n';
  }
  if (!csv) throw io_error("write failed on '" + csv_path.string() + "'");

  // One speedup curve per (graph, atomics) strong-scaling run.
  std::map<std::pair<std::string, bool>, std::vector<bench_result>> scaling;
  std::vector<bench_result> sweep;
  for (const bench_result& r : results) {
    if (r.kind == experiment::strong_scaling) {
      scaling[{r.graph, r.atomics}].push_back(r);
    } else {
      sweep.push_back(r);
    }
  }

  if (!scaling.empty()) {
    plot::line_chart chart{"Speedup vs workers", "workers", "speedup", {}};
    for (auto& [key, runs] : scaling) {
      plot::series s{key.first + (key.second ? "" : " (no atomics)"), {}, speedups(runs)};
      for (const bench_result& r : runs) s.x.push_back(r.workers);
      chart.lines.push_back(std::move(s));
    }
    plot::write_svg(chart, out_dir / "speedup_vs_workers.svg");
  }
  if (!sweep.empty()) {
    plot::line_chart chart{"Embedding time vs edges (Erdos-Renyi)", "edges", "median seconds", {}};
    plot::series s{"workers=" + std::to_string(sweep.front().workers), {}, {}};
    for (const bench_result& r : sweep) {
      s.x.push_back(static_cast<double>(r.s));
      s.y.push_back(r.median_s);
    }
    chart.lines.push_back(std::move(s));
    plot::write_svg(chart, out_dir / "time_vs_edges.svg");
  }
}

}  // namespace gee::bench
