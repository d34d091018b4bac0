#include "kcore/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "kcore/engine.hpp"
#include "kcore/graph_io.hpp"
#include "kcore/metrics.hpp"

namespace kcore::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

GraphFormat resolve_format(const std::string& path, const std::string& format) {
  if (!format.empty()) return parse_graph_format(format);
  const auto ext = std::filesystem::path(path).extension().string();
  return ext == ".mtx" || ext == ".mm" ? GraphFormat::kMatrixMarket : GraphFormat::kEdgeList;
}

Graph load_input(const std::string& path, const std::string& format) {
  return load_graph_file(path, resolve_format(path, format));
}

std::string graph_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

std::vector<Algorithm> resolve_algorithms(const std::vector<std::string>& names) {
  if (names.empty()) return parallel_algorithms();
  std::vector<Algorithm> out;
  for (const auto& name : names) out.push_back(parse_algorithm(name));
  return out;
}

// Runs `body` against a file or, for "" / "-", against `fallback`.
template <class Body>
void with_output(const std::string& path, std::ostream& fallback, Body&& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw std::runtime_error("I/O error while writing '" + path + "'");
}

void validate_workers(int workers) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("KCORE_WORKERS")) {
    try {
      int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int cmd_decompose(const DecomposeConfig& config, std::ostream& out, std::ostream& err) {
  const Algorithm algo = parse_algorithm(config.algo);
  const MetricsFormat metrics_format = parse_metrics_format(config.metrics_format);
  validate_workers(config.workers);
  const Graph g = load_input(config.input, config.format);

  EngineOptions opts{.workers = config.workers, .trace = config.trace, .debug_invariants = config.debug_invariants};
  const CoreResult result = run_algorithm(algo, g, opts);

  with_output(config.output, out, [&](std::ostream& s) { write_coreness(s, g, result.coreness); });
  with_output(config.metrics, out,
              [&](std::ostream& s) { emit_metrics(s, result, g, graph_name(config.input), metrics_format); });

  if (result.metrics.invariants) {
    const InvariantReport& r = *result.metrics.invariants;
    err << "invariant checks: " << r.checks << " passes, " << r.violations << " violations\n";
    if (!r.ok()) {
      err << "first violation: " << r.first_violation << '\n';
      return kExitMismatch;
    }
  }
  return kExitOk;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
  const auto algos = resolve_algorithms(config.algos);
  validate_workers(config.workers);
  const Graph g = load_input(config.input, config.format);
  const CoreResult reference = run_algorithm(Algorithm::kBz, g);
  auto ids = g.original_ids();
  bool all_ok = true;

  for (Algorithm a : algos) {
    const CoreResult r = run_algorithm(a, g, {.workers = config.workers});
    bool ok = true;
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
      if (r.coreness[v] != reference.coreness[v]) {
        out << r.algorithm << ": MISMATCH at vertex " << ids[v] << ": expected " << reference.coreness[v]
            << ", got " << r.coreness[v] << '\n';
        ok = false;
        break;
      }
    }
    if (ok) out << r.algorithm << ": ok\n";
    all_ok = all_ok && ok;
  }

  if (!config.coreness.empty()) {
    std::ifstream in(config.coreness);
    if (!in) throw std::runtime_error("cannot open '" + config.coreness + "'");
    const CorenessTable table = read_coreness(in);
    std::unordered_map<std::uint64_t, core_t> expected;
    for (vertex_t v = 0; v < g.num_vertices(); ++v) expected.emplace(ids[v], reference.coreness[v]);
    bool ok = table.ids.size() == g.num_vertices();
    if (!ok) out << config.coreness << ": MISMATCH: " << table.ids.size() << " lines for " << g.num_vertices() << " vertices\n";
    for (std::size_t i = 0; ok && i < table.ids.size(); ++i) {
      auto it = expected.find(table.ids[i]);
      if (it == expected.end()) {
        out << config.coreness << ": MISMATCH at vertex " << table.ids[i] << ": not in graph\n";
        ok = false;
      } else if (it->second != table.coreness[i]) {
        out << config.coreness << ": MISMATCH at vertex " << table.ids[i] << ": expected " << it->second
            << ", got " << table.coreness[i] << '\n';
        ok = false;
      }
    }
    if (ok) out << config.coreness << ": ok\n";
    all_ok = all_ok && ok;
  }
  if (!all_ok) err << "verification failed\n";
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream&) {
  const auto algos = resolve_algorithms(config.algos);
  for (int w : config.workers) validate_workers(w);
  if (config.repeat < 1) throw std::invalid_argument("repeat must be >= 1");
  const Graph g = load_input(config.input, config.format);
  const std::string name = graph_name(config.input);

  with_output(config.output, out, [&](std::ostream& s) {
    s << "algorithm,graph,n,m,k_max,iterations,atomic_rmw,adjacency_reads,elapsed_ms,workers,run\n";
    for (Algorithm a : algos) {
      for (int w : config.workers) {
        for (int run = 0; run < config.repeat; ++run) {
          const CoreResult r = run_algorithm(a, g, {.workers = w});
          std::ostringstream row;
          emit_csv_row(row, r, g, name);
          std::string line = row.str();
          line.pop_back();
          s << line << ',' << w << ',' << run << '\n';
        }
      }
    }
  });
  return kExitOk;
}

int cmd_stats(const StatsConfig& config, std::ostream& out, std::ostream&) {
  const Algorithm algo = parse_algorithm(config.algo);
  validate_workers(config.workers);
  const Graph g = load_input(config.input, config.format);
  const CoreResult r = run_algorithm(algo, g, {.workers = config.workers, .trace = true});
  out << "algorithm " << r.algorithm << ", graph " << graph_name(config.input) << ", n " << g.num_vertices()
      << ", m " << g.num_edges() << ", k_max " << r.k_max() << ", iterations " << r.metrics.iterations
      << ", atomic_rmw " << r.metrics.atomic_rmw << "\n";
  if (r.metrics.setup_adjacency_reads > 0) {
    out << "setup adjacency reads (not traced): " << r.metrics.setup_adjacency_reads << '\n';
  }
  print_activation_report(out, activation_report(r.metrics));
  print_edge_access_report(out, edge_access_report(r.metrics));
  return kExitOk;
}

int cmd_generate(const GenerateConfig& config, std::ostream& out, std::ostream&) {
  GraphSpec spec = config.spec;
  spec.model = parse_graph_model(config.model);
  const Graph g = generate_graph(spec);
  with_output(config.output, out, [&](std::ostream& s) { write_edgelist(s, g); });
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallel k-core decomposition toolkit"};
  app.require_subcommand(1);
  const int workers_default = default_workers();

  DecomposeConfig dec;
  dec.workers = workers_default;
  auto* decompose = app.add_subcommand("decompose", "Compute coreness of every vertex");
  decompose->add_option("--algo", dec.algo, "bz|gpp|peelone|pp-dyn|po-dyn|nbrcore|cntcore|histocore")->required();
  decompose->add_option("--input", dec.input, "Graph file")->required();
  decompose->add_option("--format", dec.format, "edgelist|matrix-market (default: by extension)");
  decompose->add_option("--output", dec.output, "Coreness file (default: stdout)");
  decompose->add_option("--metrics", dec.metrics, "Metrics record file (default: stdout)");
  decompose->add_option("--metrics-format", dec.metrics_format, "json|csv");
  decompose->add_option("--workers", dec.workers, "Worker threads");
  decompose->add_flag("--trace", dec.trace, "Collect per-vertex and per-edge counters");
  decompose->add_flag("--debug-invariants", dec.debug_invariants, "Run brute-force invariant checks");

  VerifyConfig ver;
  ver.workers = workers_default;
  auto* verify = app.add_subcommand("verify", "Check algorithms against the serial reference");
  verify->add_option("--input", ver.input, "Graph file")->required();
  verify->add_option("--format", ver.format, "edgelist|matrix-market");
  verify->add_option("--algos", ver.algos, "Algorithms to check (default: all parallel ones)")->delimiter(',');
  verify->add_option("--coreness", ver.coreness, "Coreness file to check as well");
  verify->add_option("--workers", ver.workers, "Worker threads");

  BenchConfig ben;
  auto* bench = app.add_subcommand("bench", "Operation-count table for algorithm x worker pairs");
  bench->add_option("--input", ben.input, "Graph file")->required();
  bench->add_option("--format", ben.format, "edgelist|matrix-market");
  bench->add_option("--algos", ben.algos, "Algorithms (default: all parallel ones)")->delimiter(',');
  bench->add_option("--workers", ben.workers, "Worker counts")->delimiter(',');
  bench->add_option("--repeat", ben.repeat, "Runs per pair");
  bench->add_option("--output", ben.output, "CSV file (default: stdout)");

  StatsConfig sta;
  sta.workers = workers_default;
  auto* stats = app.add_subcommand("stats", "Activation and edge-access distributions");
  stats->add_option("--input", sta.input, "Graph file")->required();
  stats->add_option("--format", sta.format, "edgelist|matrix-market");
  stats->add_option("--algo", sta.algo, "Algorithm")->required();
  stats->add_option("--workers", sta.workers, "Worker threads");

  GenerateConfig gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  generate->add_option("--model", gen.model, "er|chung-lu|star-tail")->required();
  generate->add_option("--n", gen.spec.n, "Vertex count (star-tail: concurrent removers)");
  generate->add_option("--p", gen.spec.p, "Edge probability (er)");
  generate->add_option("--exponent", gen.spec.exponent, "Power-law exponent (chung-lu)");
  generate->add_option("--avg-degree", gen.spec.average_degree, "Average degree (chung-lu)");
  generate->add_option("--m", gen.spec.m, "Hub surplus over k (star-tail)");
  generate->add_option("--k", gen.spec.k, "Peel level (star-tail)");
  generate->add_option("--seed", gen.spec.seed, "Random seed");
  generate->add_option("--output", gen.output, "Edge list file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*decompose) return cmd_decompose(dec, out, err);
    if (*verify) return cmd_verify(ver, out, err);
    if (*bench) return cmd_bench(ben, out, err);
    if (*stats) return cmd_stats(sta, out, err);
    if (*generate) return cmd_generate(gen, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace kcore::cli
