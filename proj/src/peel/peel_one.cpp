#include <stdexcept>
#include <string>
#include <vector>

#include "engine_common.hpp"
#include "kcore/atomic_cells.hpp"
#include "kcore/peel.hpp"
#include "kcore/superstep.hpp"

namespace kcore {
namespace {

CoreResult peel_one_impl(const Graph& g, const EngineOptions& opts, FrontierMode mode) {
  detail::Stopwatch clock;
  const bool dynamic = mode == FrontierMode::kDynamic;
  CoreResult result = detail::start_result(g, opts, dynamic ? "po-dyn" : "peelone");
  Metrics& metrics = result.metrics;
  Trace* trace = metrics.trace ? &*metrics.trace : nullptr;
  InvariantReport* report = metrics.invariants ? &*metrics.invariants : nullptr;
  const int workers = detail::worker_count(opts);
  const vertex_t n = g.num_vertices();

  // Residual degree while a vertex is live, coreness once it is settled.
  AtomicCellArray core(n);
  std::uint64_t residual = 0;
  for (vertex_t v = 0; v < n; ++v) {
    core.store(v, g.degree(v));
    if (g.degree(v) > 0) ++residual;
  }
  std::vector<std::uint8_t> processed;
  if (report) processed.assign(n, 0);

  FrontierQueue frontier(n);
  const std::int64_t max_degree = g.max_degree();
  std::int64_t k = 0;
  std::uint64_t levels = 0;
  WorkCounters sink;

  // Every vertex not yet processed must still hold a value >= k.
  auto check_floor = [&](std::span<const vertex_t> drained) {
    for (vertex_t v : drained) processed[v] = 1;
    ++report->checks;
    for (vertex_t v = 0; v < n; ++v) {
      if (!processed[v] && g.degree(v) > 0 && core.load(v) < k) {
        report->fail("vertex " + std::to_string(v) + " fell to " + std::to_string(core.load(v)) +
                     " below level " + std::to_string(k));
        return;
      }
    }
  };

  auto scan = [&](std::span<const vertex_t> drained, FrontierQueue& next, WorkCounters& counters) {
    residual -= drained.size();
    if (report) check_floor(drained);
    if (!next.empty() || residual == 0) return;
    // Level advance: values of live vertices never drop below k, so the
    // new level's frontier is exactly the live vertices holding k.
    do {
      if (k >= max_degree) throw std::logic_error("peel level passed the maximum degree");
      ++k;
      ++levels;
      parallel_for(n, workers, counters, [&](std::size_t i, WorkCounters&) {
        const auto v = static_cast<vertex_t>(i);
        if (core.load(v) == k) next.push(v);
      });
    } while (next.empty() && !dynamic);
  };

  auto scatter = [&](vertex_t v, FrontierQueue& out, WorkCounters& local) {
    if (trace) trace->activate(v);
    const edge_t base = g.offset(v);
    auto nbrs = g.neighbors(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      const vertex_t u = nbrs[j];
      ++local.adjacency_reads;
      if (trace) trace->touch_edge(base + j);
      if (core.load(u) <= k) continue;
      const auto old = core.clamped_decrement(u, k);
      if (old > k) {
        ++local.atomic_rmw;
        if (trace) trace->touch_cell(u);
      }
      if (old == k + 1) out.push(u);
    }
  };

  SuperstepOptions step{.workers = workers, .mode = mode};
  // A dynamic level whose scan comes up empty still counts as a level; keep
  // advancing until a level has work or nothing is left.
  std::uint64_t cycles = 0;
  for (;;) {
    while (frontier.empty() && residual > 0) scan({}, frontier, sink);
    if (frontier.empty()) break;
    cycles += run_supersteps(frontier, scan, scatter, step, sink);
  }

  for (vertex_t v = 0; v < n; ++v) result.coreness[v] = static_cast<core_t>(core.load(v));
  metrics.supersteps = cycles;
  metrics.iterations = dynamic ? levels : cycles;
  metrics.add(sink);
  metrics.elapsed_ms = clock.elapsed_ms();
  return result;
}

}  // namespace

CoreResult peel_one(const Graph& g, const EngineOptions& opts) {
  return peel_one_impl(g, opts, FrontierMode::kSynchronous);
}

CoreResult peel_one_dynamic(const Graph& g, const EngineOptions& opts) {
  return peel_one_impl(g, opts, FrontierMode::kDynamic);
}

}  // namespace kcore
