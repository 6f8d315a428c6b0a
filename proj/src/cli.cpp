#include "gee/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <thread>

#include "gee/bench.hpp"
#include "gee/encoder.hpp"
#include "gee/errors.hpp"
#include "gee/graph.hpp"
#include "gee/labeling.hpp"

namespace gee::cli {

namespace {

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct embed_opts {
  std::string graph, labels, out, format = "csv";
  int k = 0;
  int workers = default_workers();
  bool directed = false, serial = false, no_atomics = false, weighted = false;
};

struct gen_er_opts {
  std::uint64_t nodes = 0, edges = 0, seed = 0;
  std::string out;
};

struct gen_labels_opts {
  std::uint64_t nodes = 0, seed = 0;
  int k = 0;
  double fraction = 0.1;
  std::string out;
};

struct scaling_opts {
  std::string graph, labels, out = "bench_out";
  std::uint64_t nodes = 1'000'000, edges = 30'000'000, seed = 1;
  int k = 50;
  double fraction = 0.1;
  std::vector<int> workers{1, 2, 4};
  int reps = 3;
  bool directed = false, weighted = false, no_atomics = false, compare_atomics = false;
};

struct sweep_opts {
  std::vector<std::uint64_t> sizes{1'000'000, 2'000'000, 4'000'000, 8'000'000};
  double n_per_s = 0.05, fraction = 0.1;
  int k = 50;
  int workers = default_workers();
  std::uint64_t seed = 1;
  int reps = 3;
  std::string out = "bench_out";
};

// Loads a text edge list or, if the file carries the cache magic, a binary CSR.
csr_graph load_graph_any(const std::string& path, bool weighted, bool directed) {
  if (!std::filesystem::exists(path)) throw io_error("no such file '" + path + "'");
  if (is_binary_cache(path)) return read_binary_cache(path);
  return build_csr(load_edge_list(path, weighted, directed));
}

int run_embed(const embed_opts& o, std::ostream& out) {
  if (!std::filesystem::exists(o.graph)) throw io_error("no such file '" + o.graph + "'");

  edge_list el;
  csr_graph g;
  if (is_binary_cache(o.graph)) {
    g = read_binary_cache(o.graph);
    if (o.serial) el = edge_list_from_csr(g);
  } else {
    el = load_edge_list(o.graph, o.weighted, o.directed);
    if (!o.serial) g = build_csr(el);
  }
  const std::uint64_t n = o.serial ? el.n : g.n;
  const std::uint64_t s = o.serial ? el.size() : (g.directed ? g.num_arcs() : g.num_arcs() / 2);
  const label_vector y = load_labels(o.labels, n, o.k);

  embedding_matrix z;
  int workers = 1;
  const auto t0 = std::chrono::steady_clock::now();
  if (o.serial) {
    z = embed_serial(el, y);
  } else {
    parallel_options opts;
    opts.workers = workers = o.workers;
    opts.atomics = !o.no_atomics;
    z = embed_parallel(g, edge_accounting(g, g.directed), y, opts);
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  write_embedding(z, o.out, o.format == "binary" ? embedding_format::binary : embedding_format::csv);
  out << "n=" << n << " s=" << s << " k=" << o.k << " workers=" << workers << " time_s=" << elapsed
      << '\n';
  return exit_ok;
}

int run_gen_er(const gen_er_opts& o, std::ostream& out) {
  const edge_list el = generate_erdos_renyi(o.nodes, o.edges, o.seed);
  if (std::filesystem::path(o.out).extension() == ".bin") {
    write_binary_cache(build_csr(el), o.out);
  } else {
    write_edge_list(el, o.out, false);
  }
  out << "n=" << el.n << " s=" << el.size() << " wrote " << o.out << '\n';
  return exit_ok;
}

int run_gen_labels(const gen_labels_opts& o, std::ostream& out) {
  const label_vector y = random_labels(o.nodes, o.k, o.fraction, o.seed);
  write_labels(y, o.out);
  std::uint64_t labeled = 0;
  for (class_id c : y.labels) labeled += c != 0;
  out << "n=" << o.nodes << " k=" << o.k << " labeled=" << labeled << " wrote " << o.out << '\n';
  return exit_ok;
}

void print_results(const std::vector<bench::bench_result>& results, std::ostream& out) {
  const std::vector<double> sp = bench::speedups(results);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << r.graph << " n=" << r.n << " s=" << r.s << " k=" << r.k << " workers=" << r.workers
        << " atomics=" << (r.atomics ? 1 : 0) << " median_s=" << r.median_s
        << " projection_s=" << r.projection_s << " speedup=" << sp[i] << '\n';
  }
}

int run_bench_scaling(const scaling_opts& o, std::ostream& out) {
  csr_graph g;
  std::string name;
  if (!o.graph.empty()) {
    g = load_graph_any(o.graph, o.weighted, o.directed);
    name = std::filesystem::path(o.graph).stem().string();
  } else {
    g = build_csr(generate_erdos_renyi(o.nodes, o.edges, o.seed));
    name = "er-" + std::to_string(o.edges);
  }
  const label_vector y = o.labels.empty() ? random_labels(g.n, o.k, o.fraction, o.seed + 1)
                                          : load_labels(o.labels, g.n, o.k);

  bench::scaling_config cfg;
  cfg.worker_counts = o.workers;
  cfg.reps = o.reps;
  cfg.atomics = !o.no_atomics;
  cfg.graph_name = name;
  const arc_update rule = edge_accounting(g, g.directed);
  auto results = bench::run_strong_scaling(g, rule, y, cfg);
  print_results(results, out);
  if (o.compare_atomics) {
    const int workers = *std::max_element(o.workers.begin(), o.workers.end());
    const auto cmp = bench::compare_atomics(g, rule, y, workers, o.reps, name);
    out << "atomics comparison workers=" << workers << " atomic_s=" << cmp.atomic.median_s
        << " unsafe_s=" << cmp.unsafe.median_s << " ratio=" << cmp.ratio << '\n';
    results.push_back(cmp.unsafe);
  }
  bench::emit_report(results, o.out);
  return exit_ok;
}

int run_bench_sweep(const sweep_opts& o, std::ostream& out) {
  bench::sweep_config cfg;
  cfg.sizes = o.sizes;
  cfg.n_per_s = o.n_per_s;
  cfg.k = o.k;
  cfg.label_fraction = o.fraction;
  cfg.workers = o.workers;
  cfg.seed = o.seed;
  cfg.reps = o.reps;
  const auto results = bench::run_edge_sweep(cfg);
  bench::emit_report(results, o.out);
  print_results(results, out);

  if (results.size() >= 2) {
    std::vector<double> xs, ys;
    for (const auto& r : results) xs.push_back(static_cast<double>(r.s)), ys.push_back(r.median_s);
    const auto fit = bench::fit_line(xs, ys);
    out << "linear fit: slope=" << fit.slope << " s/edge intercept=" << fit.intercept
        << " r2=" << fit.r2 << '\n';
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-hot graph encoder embedding"};
  app.name(args.empty() ? "gee" : args.front());
  app.require_subcommand(1);

  embed_opts eo;
  auto* embed = app.add_subcommand("embed", "Embed a graph given node labels");
  embed->add_option("--graph", eo.graph, "Edge list (text) or CSR cache")->required();
  embed->add_option("--labels", eo.labels, "Label file")->required();
  embed->add_option("--k", eo.k, "Number of classes")->required()->check(CLI::PositiveNumber);
  embed->add_flag("--directed", eo.directed, "Treat the edge list as directed");
  embed->add_flag("--weighted", eo.weighted, "Read a third weight column");
  embed->add_flag("--serial", eo.serial, "Use the serial reference pass");
  embed->add_option("--workers", eo.workers, "Worker threads")->check(CLI::PositiveNumber);
  embed->add_flag("--no-atomics", eo.no_atomics, "Unsynchronized updates (measurement only)");
  embed->add_option("--out", eo.out, "Output path")->required();
  embed->add_option("--format", eo.format, "csv or binary")->check(CLI::IsMember({"csv", "binary"}));

  gen_er_opts go;
  auto* gen_er = app.add_subcommand("gen-er", "Generate an Erdos-Renyi G(n, s) edge list");
  gen_er->add_option("--nodes", go.nodes, "Node count")->required()->check(CLI::PositiveNumber);
  gen_er->add_option("--edges", go.edges, "Edge count")->required();
  gen_er->add_option("--seed", go.seed, "RNG seed")->required();
  gen_er->add_option("--out", go.out, "Output path (.bin writes a CSR cache)")->required();

  gen_labels_opts lo;
  auto* gen_labels = app.add_subcommand("gen-labels", "Generate random semi-supervised labels");
  gen_labels->add_option("--nodes", lo.nodes, "Node count")->required()->check(CLI::PositiveNumber);
  gen_labels->add_option("--k", lo.k, "Number of classes")->required()->check(CLI::PositiveNumber);
  gen_labels->add_option("--fraction", lo.fraction, "Fraction of labeled nodes")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen_labels->add_option("--seed", lo.seed, "RNG seed")->required();
  gen_labels->add_option("--out", lo.out, "Output path")->required();

  scaling_opts so;
  auto* scaling = app.add_subcommand("bench-scaling", "Strong scaling over worker counts");
  scaling->add_option("--graph", so.graph, "Edge list or CSR cache (default: generated G(n, s))");
  scaling->add_option("--labels", so.labels, "Label file (default: random labels)");
  scaling->add_option("--nodes", so.nodes, "Generated graph nodes")->check(CLI::PositiveNumber);
  scaling->add_option("--edges", so.edges, "Generated graph edges");
  scaling->add_option("--seed", so.seed, "RNG seed");
  scaling->add_option("--k", so.k, "Number of classes")->check(CLI::PositiveNumber);
  scaling->add_option("--fraction", so.fraction, "Labeled fraction")->check(CLI::Range(0.0, 1.0));
  scaling->add_option("--workers", so.workers, "Worker counts")->delimiter(',')->check(CLI::PositiveNumber);
  scaling->add_option("--reps", so.reps, "Timed repetitions")->check(CLI::Range(3, 1000));
  scaling->add_flag("--directed", so.directed, "Treat a text edge list as directed");
  scaling->add_flag("--weighted", so.weighted, "Read a third weight column");
  scaling->add_flag("--no-atomics", so.no_atomics, "Unsynchronized updates (measurement only)");
  scaling->add_flag("--compare-atomics", so.compare_atomics,
                    "Also time atomic vs unsynchronized updates at the largest worker count");
  scaling->add_option("--out", so.out, "Report directory");

  sweep_opts wo;
  auto* sweep = app.add_subcommand("bench-sweep", "Runtime vs edge count on G(n, s)");
  sweep->add_option("--sizes", wo.sizes, "Edge counts")->delimiter(',');
  sweep->add_option("--n-per-s", wo.n_per_s, "Nodes per edge")->check(CLI::PositiveNumber);
  sweep->add_option("--k", wo.k, "Number of classes")->check(CLI::PositiveNumber);
  sweep->add_option("--fraction", wo.fraction, "Labeled fraction")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--workers", wo.workers, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", wo.seed, "RNG seed");
  sweep->add_option("--reps", wo.reps, "Timed repetitions")->check(CLI::Range(3, 1000));
  sweep->add_option("--out", wo.out, "Report directory");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("gee");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? exit_ok : exit_usage;
  }

  try {
    if (*embed) return run_embed(eo, out);
    if (*gen_er) return run_gen_er(go, out);
    if (*gen_labels) return run_gen_labels(lo, out);
    if (*scaling) return run_bench_scaling(so, out);
    if (*sweep) return run_bench_sweep(wo, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_data;
  }
  return exit_usage;
}

}  // namespace gee::cli
