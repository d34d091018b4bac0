#include <limits>
#include <vector>

#include "engine_common.hpp"
#include "kcore/atomic_cells.hpp"
#include "kcore/peel.hpp"
#include "kcore/superstep.hpp"

namespace kcore {

CoreResult gpp(const Graph& g, const EngineOptions& opts) {
  detail::Stopwatch clock;
  CoreResult result = detail::start_result(g, opts, "gpp");
  Metrics& metrics = result.metrics;
  Trace* trace = metrics.trace ? &*metrics.trace : nullptr;
  const int workers = detail::worker_count(opts);
  const vertex_t n = g.num_vertices();

  constexpr std::uint32_t kResidual = std::numeric_limits<std::uint32_t>::max();
  AtomicCellArray deg(n);
  // Superstep in which each vertex was removed; isolated vertices count as
  // removed before the first one.
  std::vector<std::uint32_t> removed_in(n, kResidual);
  std::vector<core_t>& core = result.coreness;
  std::uint64_t residual = 0;
  for (vertex_t v = 0; v < n; ++v) {
    deg.store(v, g.degree(v));
    if (g.degree(v) == 0) {
      removed_in[v] = 0;
    } else {
      ++residual;
    }
  }

  FrontierQueue frontier(n);
  std::uint32_t stamp = 0;
  core_t k = 0;
  WorkCounters sink;

  auto scan = [&](std::span<const vertex_t>, FrontierQueue& next, WorkCounters& counters) {
    if (residual == 0) return;
    ++stamp;
    for (;;) {
      parallel_for(n, workers, counters, [&](std::size_t i, WorkCounters&) {
        const auto v = static_cast<vertex_t>(i);
        if (removed_in[v] == kResidual && deg.load(v) <= static_cast<std::int64_t>(k)) {
          core[v] = k;
          removed_in[v] = stamp;
          next.push(v);
        }
      });
      if (!next.empty()) break;
      ++k;
    }
    residual -= next.size();
  };

  auto scatter = [&](vertex_t v, FrontierQueue&, WorkCounters& local) {
    if (trace) trace->activate(v);
    const edge_t base = g.offset(v);
    auto nbrs = g.neighbors(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      const vertex_t u = nbrs[j];
      ++local.adjacency_reads;
      if (trace) trace->touch_edge(base + j);
      if (removed_in[u] < stamp) continue;
      deg.fetch_sub(u, 1);
      ++local.atomic_rmw;
      if (trace) trace->touch_cell(u);
    }
  };

  scan({}, frontier, sink);
  SuperstepOptions step{.workers = workers, .mode = FrontierMode::kSynchronous};
  metrics.iterations = run_supersteps(frontier, scan, scatter, step, sink);
  metrics.supersteps = metrics.iterations;
  metrics.add(sink);
  metrics.elapsed_ms = clock.elapsed_ms();
  return result;
}

}  // namespace kcore
