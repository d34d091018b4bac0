#include <algorithm>
#include <string>
#include <vector>

#include "checks.hpp"
#include "engine_common.hpp"
#include "kcore/hindex.hpp"
#include "kcore/peel.hpp"
#include "kcore/superstep.hpp"

namespace kcore {

CoreResult cnt_core(const Graph& g, const EngineOptions& opts) {
  detail::Stopwatch clock;
  CoreResult result = detail::start_result(g, opts, "cntcore");
  Metrics& metrics = result.metrics;
  Trace* trace = metrics.trace ? &*metrics.trace : nullptr;
  InvariantReport* report = metrics.invariants ? &*metrics.invariants : nullptr;
  const int workers = detail::worker_count(opts);
  const vertex_t n = g.num_vertices();

  std::vector<core_t>& core = result.coreness;
  for (vertex_t v = 0; v < n; ++v) core[v] = g.degree(v);
  std::vector<core_t> next_core(core);
  std::vector<std::uint8_t> dropped(n, 0);

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

  // Active vertex: count neighbors at or above its estimate. Fewer than the
  // estimate means it will drop, so re-estimate it and activate its neighbors.
  auto scatter = [&](vertex_t v, FrontierQueue& next, WorkCounters& local) {
    if (trace) trace->activate(v);
    const std::span<const core_t> current(core);
    const core_t own = core[v];
    const edge_t base = g.offset(v);
    auto nbrs = g.neighbors(v);
    vertex_t cnt = 0;
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      if (trace) trace->touch_edge(base + j);
      cnt += current[nbrs[j]] >= own ? 1 : 0;
    }
    local.adjacency_reads += nbrs.size();
    if (cnt >= own) return;

    // One more pass: bucket the neighbor estimates (capped at own) for the
    // h-index and activate each neighbor.
    thread_local std::vector<core_t> count;
    count.assign(static_cast<std::size_t>(own) + 1, 0);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      if (trace) trace->touch_edge(base + j);
      ++count[std::min(current[nbrs[j]], own)];
      next.push(nbrs[j]);
    }
    local.adjacency_reads += nbrs.size();
    core_t h = own;
    for (core_t at_least = 0; h > 0; --h) {
      at_least += count[h];
      if (at_least >= h) break;
    }
    next_core[v] = h;
    dropped[v] = 1;
  };

  auto scan = [&](std::span<const vertex_t> drained, FrontierQueue& next, WorkCounters&) {
    if (report) {
      // Active but not selected: must be stable under the pre-commit values.
      ++report->checks;
      for (vertex_t v : drained) {
        if (!dropped[v] && neighbor_h_index(g, core, v, core[v]) < core[v]) {
          ++report->missed_decreases;
          report->fail("active vertex " + std::to_string(v) + " would drop but was not selected");
        }
      }
    }
    for (vertex_t v : drained) {
      if (!dropped[v]) continue;
      if (report) detail::record_selection(*report, v, core[v], next_core[v]);
      core[v] = next_core[v];
      dropped[v] = 0;
    }
    if (report) {
      detail::check_estimate_bounds(core, previous, exact, *report);
      // Inactive vertices saw no neighbor change, so they must be stable.
      detail::check_no_missed_decrease(g, core, [&](vertex_t v) { return next.contains(v); }, *report);
    }
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
