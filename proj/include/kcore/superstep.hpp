#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kcore/frontier.hpp"
#include "kcore/metrics.hpp"

namespace kcore {

enum class FrontierMode {
  kSynchronous,  // items pushed during a cycle are processed in the next cycle
  kDynamic,      // items pushed during a cycle are processed in the same cycle
};

struct SuperstepOptions {
  int workers = 1;
  FrontierMode mode = FrontierMode::kSynchronous;
  std::size_t chunk = 64;
};

/// Runs fn(i, counters) for i in [0, count). Workers claim fixed-size chunks
/// from a shared cursor; each worker's counters are merged into `sink`.
template <class Fn>
void parallel_for(std::size_t count, int workers, WorkCounters& sink, Fn&& fn, std::size_t chunk = 256) {
  if (workers <= 1 || count <= chunk) {
    for (std::size_t i = 0; i < count; ++i) fn(i, sink);
    return;
  }
#ifdef _OPENMP
  const auto n = static_cast<std::int64_t>(count);
  const auto c = static_cast<int>(chunk);
#pragma omp parallel num_threads(workers)
  {
    WorkCounters local;
#pragma omp for schedule(dynamic, c) nowait
    for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i), local);
#pragma omp critical(kcore_counter_merge)
    sink += local;
  }
#else
  for (std::size_t i = 0; i < count; ++i) fn(i, sink);
#endif
}

namespace detail {

// Consumes the queue in place until every published item, including those
// pushed while the cycle runs, has been processed.
template <class Scatter>
void drain_in_place(FrontierQueue& queue, Scatter& scatter, int workers, WorkCounters& sink) {
  std::atomic<std::size_t> head{0};
  std::atomic<std::size_t> done{0};
  auto work = [&](WorkCounters& local) {
    for (;;) {
      std::size_t h = head.load(std::memory_order_acquire);
      if (h < queue.size()) {
        if (!head.compare_exchange_weak(h, h + 1, std::memory_order_acq_rel)) continue;
        scatter(queue.wait_item(h), queue, local);
        done.fetch_add(1, std::memory_order_acq_rel);
        continue;
      }
      // done is read before size: equality means nothing was in flight.
      if (done.load(std::memory_order_acquire) == queue.size()) return;
      std::this_thread::yield();
    }
  };
#ifdef _OPENMP
  if (workers > 1) {
#pragma omp parallel num_threads(workers)
    {
      WorkCounters local;
      work(local);
#pragma omp critical(kcore_counter_merge)
      sink += local;
    }
    return;
  }
#endif
  work(sink);
}

}  // namespace detail

/// Bulk-synchronous driver. Each cycle drains the frontier, applies
/// scatter(v, queue, counters) to every item in parallel, then, after a full
/// barrier, calls scan(drained, queue, counters) on the driver thread to
/// extend the next frontier. Stops when a cycle ends with an empty frontier.
/// Returns the number of cycles; an empty initial frontier gives 0.
template <class Scan, class Scatter>
std::uint64_t run_supersteps(FrontierQueue& frontier, Scan&& scan, Scatter&& scatter,
                             const SuperstepOptions& opts, WorkCounters& sink) {
  std::uint64_t cycles = 0;
  while (!frontier.empty()) {
    ++cycles;
    std::vector<vertex_t> drained;
    if (opts.mode == FrontierMode::kSynchronous) {
      drained = frontier.drain();
      parallel_for(
          drained.size(), opts.workers, sink,
          [&](std::size_t i, WorkCounters& local) { scatter(drained[i], frontier, local); }, opts.chunk);
    } else {
      detail::drain_in_place(frontier, scatter, opts.workers, sink);
      drained = frontier.drain();
    }
    scan(std::span<const vertex_t>(drained), frontier, sink);
  }
  return cycles;
}

}  // namespace kcore
