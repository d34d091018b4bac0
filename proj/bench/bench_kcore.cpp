// Serial bz against the parallel engines on generated graphs. Counters carry
// the operation counts; wall time is for local comparison only.
//
//   kcore_bench --benchmark_filter='powerlaw/.*' --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>

#include <map>

#include "kcore/engine.hpp"
#include "kcore/generate.hpp"

namespace {

using kcore::Algorithm;

const kcore::Graph& graph(const std::string& name) {
  static std::map<std::string, kcore::Graph> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  kcore::GraphSpec spec;
  if (name == "powerlaw") {
    spec = {.model = kcore::GraphModel::kChungLu, .n = 200000, .exponent = 2.2, .average_degree = 16, .seed = 1};
  } else {
    spec = {.model = kcore::GraphModel::kErdosRenyi, .n = 4000, .p = 0.01, .seed = 1};
  }
  return cache.emplace(name, kcore::generate_graph(spec)).first->second;
}

void run(benchmark::State& state, const std::string& graph_name, Algorithm algo) {
  const kcore::Graph& g = graph(graph_name);
  const int workers = static_cast<int>(state.range(0));
  kcore::CoreResult last;
  for (auto _ : state) {
    last = kcore::run_algorithm(algo, g, {.workers = workers});
    benchmark::DoNotOptimize(last.coreness.data());
  }
  state.counters["k_max"] = last.k_max();
  state.counters["iterations"] = static_cast<double>(last.metrics.iterations);
  state.counters["atomic_rmw"] = static_cast<double>(last.metrics.atomic_rmw);
  state.counters["adj_reads"] = static_cast<double>(last.metrics.adjacency_reads);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 2 *
                          static_cast<std::int64_t>(g.num_edges()));
}

void register_all() {
  for (const std::string graph_name : {"powerlaw", "er"}) {
    for (Algorithm a : kcore::all_algorithms()) {
      auto* b = benchmark::RegisterBenchmark((graph_name + "/" + kcore::algorithm_name(a)).c_str(),
                                             [=](benchmark::State& s) { run(s, graph_name, a); });
      b->Unit(benchmark::kMillisecond)->UseRealTime();
      if (a == Algorithm::kBz) {
        b->Arg(1);
      } else {
        b->Arg(1)->Arg(2)->Arg(4)->Arg(8);
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  register_all();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
