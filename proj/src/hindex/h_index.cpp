#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcore/graph.hpp"
#include "kcore/hindex.hpp"

namespace kcore {

core_t h_index(std::span<const core_t> values) {
  const auto n = static_cast<core_t>(values.size());
  std::vector<core_t> count(static_cast<std::size_t>(n) + 1, 0);
  for (core_t x : values) ++count[std::min(x, n)];
  core_t at_least = 0;
  for (core_t h = n; h > 0; --h) {
    at_least += count[h];
    if (at_least >= h) return h;
  }
  return 0;
}

core_t neighbor_h_index(const Graph& g, std::span<const core_t> core, vertex_t v, core_t cap) {
  thread_local std::vector<core_t> count;
  auto nbrs = g.neighbors(v);
  cap = std::min<core_t>(cap, static_cast<core_t>(nbrs.size()));
  count.assign(static_cast<std::size_t>(cap) + 1, 0);
  for (vertex_t u : nbrs) ++count[std::min(core[u], cap)];
  core_t at_least = 0;
  for (core_t h = cap; h > 0; --h) {
    at_least += count[h];
    if (at_least >= h) return h;
  }
  return 0;
}

vertex_t compute_cnt(const Graph& g, std::span<const core_t> core, vertex_t v) {
  if (v >= g.num_vertices()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  const core_t own = core[v];
  vertex_t cnt = 0;
  for (vertex_t u : g.neighbors(v)) cnt += core[u] >= own ? 1 : 0;
  return cnt;
}

HistogramStore::HistogramStore(const Graph& g, std::vector<core_t> core)
    : offsets_(g.offsets()), slots_(g.adjacency().size()), core_(std::move(core)), oldcore_(core_) {}

HistogramStore init_histo(const Graph& g, std::span<const core_t> core, std::uint64_t* reads) {
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (core[v] != g.degree(v)) {
      throw std::invalid_argument("init_histo requires core[v] == degree(v) for every vertex");
    }
  }
  HistogramStore store(g, std::vector<core_t>(core.begin(), core.end()));
  auto& slots = store.slots();
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    for (vertex_t u : g.neighbors(v)) {
      const std::size_t i = store.index(v, std::min(core[u], core[v]));
      slots.store(i, slots.load(i) + 1);
    }
  }
  if (reads) *reads += g.adjacency().size();
  return store;
}

SumResult sum_histo(HistogramStore& store, vertex_t v) {
  auto core = store.core();
  const core_t before = core[v];
  std::int64_t sum = 0;
  core_t k = before;
  for (; k > 0; --k) {
    sum += store.slot(v, k);
    if (sum >= static_cast<std::int64_t>(k)) break;
  }
  if (k == before) return {k, false};
  core[v] = k;
  store.oldcore()[v] = before;
  if (k > 0) store.slots().store(store.index(v, k), sum);
  return {k, true};
}

}  // namespace kcore
