#include <limits>
#include <stdexcept>
#include <vector>

#include "engine_common.hpp"
#include "kcore/atomic_cells.hpp"
#include "kcore/peel.hpp"
#include "kcore/superstep.hpp"

namespace kcore {

CoreResult pp_dynamic(const Graph& g, const EngineOptions& opts) {
  detail::Stopwatch clock;
  CoreResult result = detail::start_result(g, opts, "pp-dyn");
  Metrics& metrics = result.metrics;
  Trace* trace = metrics.trace ? &*metrics.trace : nullptr;
  const int workers = detail::worker_count(opts);
  const vertex_t n = g.num_vertices();

  constexpr core_t kUnassigned = std::numeric_limits<core_t>::max();
  AtomicCellArray deg(n);
  // Level at which each vertex entered a frontier; this is its coreness.
  std::vector<core_t>& level_of = result.coreness;
  std::uint64_t residual = 0;
  for (vertex_t v = 0; v < n; ++v) {
    deg.store(v, g.degree(v));
    if (g.degree(v) > 0) {
      level_of[v] = kUnassigned;
      ++residual;
    }
  }

  FrontierQueue frontier(n);
  const core_t max_degree = g.max_degree();
  core_t k = 0;
  WorkCounters sink;

  auto scan = [&](std::span<const vertex_t> drained, FrontierQueue& next, WorkCounters& counters) {
    residual -= drained.size();
    if (residual == 0) return;
    if (k >= max_degree) throw std::logic_error("peel level passed the maximum degree");
    ++k;
    parallel_for(n, workers, counters, [&](std::size_t i, WorkCounters&) {
      const auto v = static_cast<vertex_t>(i);
      if (level_of[v] == kUnassigned && deg.load(v) == static_cast<std::int64_t>(k)) {
        level_of[v] = k;
        next.push(v);
      }
    });
  };

  auto scatter = [&](vertex_t v, FrontierQueue& out, WorkCounters& local) {
    if (trace) trace->activate(v);
    const auto level = static_cast<std::int64_t>(k);
    const edge_t base = g.offset(v);
    auto nbrs = g.neighbors(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      const vertex_t u = nbrs[j];
      ++local.adjacency_reads;
      if (trace) trace->touch_edge(base + j);
      // Concurrent writers only ever store k, which this test treats like
      // "unassigned".
      if (detail::relaxed_load(level_of[u]) < k) continue;
      const auto old = deg.fetch_sub(u, 1);
      ++local.atomic_rmw;
      if (trace) trace->touch_cell(u);
      if (old == level + 1) {
        detail::relaxed_store(level_of[u], k);
        out.push(u);
      } else if (old <= level) {
        deg.fetch_add(u, 1);
        ++local.atomic_rmw;
        if (trace) trace->touch_cell(u);
      }
    }
  };

  SuperstepOptions step{.workers = workers, .mode = FrontierMode::kDynamic};
  std::uint64_t cycles = 0;
  for (;;) {
    while (frontier.empty() && residual > 0) scan({}, frontier, sink);
    if (frontier.empty()) break;
    cycles += run_supersteps(frontier, scan, scatter, step, sink);
  }

  metrics.supersteps = cycles;
  metrics.iterations = k;
  metrics.add(sink);
  metrics.elapsed_ms = clock.elapsed_ms();
  return result;
}

}  // namespace kcore
