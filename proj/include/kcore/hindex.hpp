#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kcore/atomic_cells.hpp"
#include "kcore/engine.hpp"

namespace kcore {

/// Largest h such that at least h of the values are >= h.
core_t h_index(std::span<const core_t> values);

/// h-index of v's neighbor estimates, capped at `cap` (values above the cap
/// count as the cap). Uses per-thread scratch space.
core_t neighbor_h_index(const Graph& g, std::span<const core_t> core, vertex_t v, core_t cap);

/// |{u in nbr(v) : core[u] >= core[v]}|. Throws std::out_of_range for a bad v.
vertex_t compute_cnt(const Graph& g, std::span<const core_t> core, vertex_t v);

/// Per-vertex histograms of neighbor estimates. Vertex v owns the slots for
/// indices 1..degree(v), laid out like v's adjacency list (2m cells total).
/// At every iteration boundary:
///   slot(v, core[v]) = |{u in nbr(v) : core[u] >= core[v]}|   (the cnt slot)
///   slot(v, j)       = |{u in nbr(v) : core[u] == j}|         for j < core[v]
/// Slots above core[v] are stale.
class HistogramStore {
 public:
  HistogramStore() = default;
  HistogramStore(const Graph& g, std::vector<core_t> core);

  std::int64_t slot(vertex_t v, core_t j) const { return slots_.load(index(v, j)); }
  std::size_t index(vertex_t v, core_t j) const { return static_cast<std::size_t>(offsets_[v] + j - 1); }

  AtomicCellArray& slots() { return slots_; }
  std::span<const core_t> core() const { return core_; }
  std::span<core_t> core() { return core_; }
  std::span<const core_t> oldcore() const { return oldcore_; }
  std::span<core_t> oldcore() { return oldcore_; }

 private:
  std::span<const edge_t> offsets_;
  AtomicCellArray slots_;
  std::vector<core_t> core_;
  std::vector<core_t> oldcore_;
};

/// Builds the histograms: slot(v, min(core[u], core[v])) += 1 for every
/// adjacency entry (v, u). Requires core[v] == degree(v); oldcore = core.
/// Adds the adjacency entries read to `reads` when given.
HistogramStore init_histo(const Graph& g, std::span<const core_t> core, std::uint64_t* reads = nullptr);

struct SumResult {
  core_t core;
  bool changed;
};

/// Re-estimates v from its own histogram: walks k down from core[v],
/// accumulating slots, and stops at the first k with sum >= k. On a change,
/// records oldcore[v] and consolidates slot(v, k) = sum.
SumResult sum_histo(HistogramStore& store, vertex_t v);

/// Moves v's contribution in each neighbor's histogram from its old estimate
/// to its new one, for neighbors whose estimate is above v's new value.
/// `trigger(u)` fires exactly once for each neighbor whose cnt slot this
/// call drives from core[u] to core[u] - 1. Returns {reads, rmw}.
template <class Trigger>
WorkCounters update_histo(HistogramStore& store, const Graph& g, vertex_t v, core_t oldcore_v,
                          core_t newcore_v, Trigger&& trigger, Trace* trace = nullptr) {
  WorkCounters counters;
  auto core = store.core();
  auto& slots = store.slots();
  const edge_t base = g.offset(v);
  auto nbrs = g.neighbors(v);
  for (std::size_t j = 0; j < nbrs.size(); ++j) {
    const vertex_t u = nbrs[j];
    ++counters.adjacency_reads;
    if (trace) trace->touch_edge(base + j);
    const core_t cu = core[u];
    if (cu <= newcore_v) continue;
    const auto old = slots.fetch_sub(store.index(u, std::min(oldcore_v, cu)), 1);
    slots.fetch_add(store.index(u, newcore_v), 1);
    counters.atomic_rmw += 2;
    if (trace) {
      trace->touch_cell(u);
      trace->touch_cell(u);
    }
    if (oldcore_v >= cu && old == static_cast<std::int64_t>(cu)) trigger(u);
  }
  return counters;
}

/// Synchronous h-index iteration that re-estimates every neighbor of every
/// changed vertex.
CoreResult nbr_core(const Graph& g, const EngineOptions& opts = {});

/// Re-estimates only vertices with cnt < core (the vertices whose estimate
/// is certain to drop); the next active set is their neighborhoods.
CoreResult cnt_core(const Graph& g, const EngineOptions& opts = {});

/// cnt_core with persistent histograms: a frontier vertex re-estimates from
/// its own histogram, then pushes its change into its neighbors' histograms.
CoreResult histo_core(const Graph& g, const EngineOptions& opts = {});

}  // namespace kcore
