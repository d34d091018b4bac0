#include <vector>

#include "checks.hpp"
#include "engine_common.hpp"
#include "kcore/hindex.hpp"
#include "kcore/peel.hpp"
#include "kcore/superstep.hpp"

namespace kcore {

CoreResult histo_core(const Graph& g, const EngineOptions& opts) {
  detail::Stopwatch clock;
  CoreResult result = detail::start_result(g, opts, "histocore");
  Metrics& metrics = result.metrics;
  Trace* trace = metrics.trace ? &*metrics.trace : nullptr;
  InvariantReport* report = metrics.invariants ? &*metrics.invariants : nullptr;
  const int workers = detail::worker_count(opts);
  const vertex_t n = g.num_vertices();

  std::vector<core_t> degrees(n);
  for (vertex_t v = 0; v < n; ++v) degrees[v] = g.degree(v);
  HistogramStore store = init_histo(g, degrees, &metrics.setup_adjacency_reads);
  metrics.adjacency_reads += metrics.setup_adjacency_reads;
  auto core = store.core();
  std::vector<std::uint8_t> changed(n, 0);

  std::vector<core_t> exact;
  std::vector<core_t> previous;
  if (report) {
    exact = bz_serial(g).coreness;
    previous = degrees;
    detail::check_histograms(g, store, *report);
  }

  // First frontier: vertices whose cnt slot is already below their estimate.
  FrontierQueue frontier(n);
  for (vertex_t v = 0; v < n; ++v) {
    if (core[v] > 0 && store.slot(v, core[v]) < static_cast<std::int64_t>(core[v])) frontier.push(v);
  }
  if (report) {
    detail::check_no_missed_decrease(g, core, [&](vertex_t v) { return frontier.contains(v); }, *report);
  }

  // Sum superstep: each frontier vertex reads only its own histogram.
  auto scatter = [&](vertex_t v, FrontierQueue&, WorkCounters&) {
    if (trace) trace->activate(v);
    changed[v] = sum_histo(store, v).changed ? 1 : 0;
  };

  // Update superstep over the vertices that changed; triggered neighbors
  // form the next frontier.
  auto scan = [&](std::span<const vertex_t> drained, FrontierQueue& next, WorkCounters& counters) {
    if (report) {
      for (vertex_t v : drained) {
        detail::record_selection(*report, v, changed[v] ? store.oldcore()[v] : core[v], core[v]);
      }
    }
    parallel_for(drained.size(), workers, counters, [&](std::size_t i, WorkCounters& local) {
      const vertex_t v = drained[i];
      if (!changed[v]) return;
      changed[v] = 0;
      local += update_histo(store, g, v, store.oldcore()[v], core[v], [&](vertex_t u) { next.push(u); }, trace);
    }, 16);
    if (report) {
      detail::check_estimate_bounds(core, previous, exact, *report);
      detail::check_histograms(g, store, *report);
      detail::check_no_missed_decrease(g, core, [&](vertex_t v) { return next.contains(v); }, *report);
    }
  };

  WorkCounters sink;
  SuperstepOptions step{.workers = workers, .mode = FrontierMode::kSynchronous};
  metrics.iterations = run_supersteps(frontier, scan, scatter, step, sink);
  metrics.supersteps = metrics.iterations;
  metrics.add(sink);
  for (vertex_t v = 0; v < n; ++v) result.coreness[v] = core[v];
  metrics.elapsed_ms = clock.elapsed_ms();
  return result;
}

}  // namespace kcore
