#include <vector>

#include "checks.hpp"
#include "engine_common.hpp"
#include "kcore/hindex.hpp"
#include "kcore/peel.hpp"
#include "kcore/superstep.hpp"

namespace kcore {

CoreResult nbr_core(const Graph& g, const EngineOptions& opts) {
  detail::Stopwatch clock;
  CoreResult result = detail::start_result(g, opts, "nbrcore");
  Metrics& metrics = result.metrics;
  Trace* trace = metrics.trace ? &*metrics.trace : nullptr;
  InvariantReport* report = metrics.invariants ? &*metrics.invariants : nullptr;
  const int workers = detail::worker_count(opts);
  const vertex_t n = g.num_vertices();

  std::vector<core_t>& core = result.coreness;
  for (vertex_t v = 0; v < n; ++v) core[v] = g.degree(v);
  std::vector<core_t> next_core(core);
  std::vector<std::uint8_t> changed(n, 0);

  std::vector<core_t> exact;
  std::vector<core_t> previous;
  if (report) {
    exact = bz_serial(g).coreness;
    previous = core;
  }

  FrontierQueue active(n);
  for (vertex_t v = 0; v < n; ++v) {
    if (core[v] > 0) active.push(v);
  }

  auto scatter = [&](vertex_t v, FrontierQueue& next, WorkCounters& local) {
    if (trace) trace->activate(v);
    const core_t own = core[v];
    const edge_t base = g.offset(v);
    auto nbrs = g.neighbors(v);
    const core_t h = neighbor_h_index(g, core, v, own);
    local.adjacency_reads += nbrs.size();
    if (trace) {
      for (std::size_t j = 0; j < nbrs.size(); ++j) trace->touch_edge(base + j);
    }
    if (h == own) return;
    next_core[v] = h;
    changed[v] = 1;
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      if (trace) trace->touch_edge(base + j);
      next.push(nbrs[j]);
    }
    local.adjacency_reads += nbrs.size();
  };

  auto scan = [&](std::span<const vertex_t> drained, FrontierQueue&, WorkCounters&) {
    for (vertex_t v : drained) {
      if (!changed[v]) continue;
      core[v] = next_core[v];
      changed[v] = 0;
    }
    if (report) detail::check_estimate_bounds(core, previous, exact, *report);
  };

  WorkCounters sink;
  SuperstepOptions step{.workers = workers, .mode = FrontierMode::kSynchronous};
  metrics.iterations = run_supersteps(active, scan, scatter, step, sink);
  metrics.supersteps = metrics.iterations;
  metrics.add(sink);
  metrics.elapsed_ms = clock.elapsed_ms();
  return result;
}

}  // namespace kcore
