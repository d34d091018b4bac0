#include <algorithm>
#include <vector>

#include "engine_common.hpp"
#include "kcore/peel.hpp"

namespace kcore {

CoreResult bz_serial(const Graph& g, const EngineOptions& opts) {
  detail::Stopwatch clock;
  CoreResult result = detail::start_result(g, opts, "bz");
  Metrics& metrics = result.metrics;
  Trace* trace = metrics.trace ? &*metrics.trace : nullptr;

  const vertex_t n = g.num_vertices();
  const vertex_t max_deg = g.max_degree();
  std::vector<vertex_t> deg(n);
  std::vector<vertex_t> bin(static_cast<std::size_t>(max_deg) + 1, 0);
  for (vertex_t v = 0; v < n; ++v) {
    deg[v] = static_cast<vertex_t>(g.neighbors(v).size());
    ++bin[deg[v]];
  }
  // bin[d] becomes the first position of degree-d vertices in `order`.
  vertex_t start = 0;
  for (auto& b : bin) {
    vertex_t count = b;
    b = start;
    start += count;
  }
  std::vector<vertex_t> order(n);
  std::vector<vertex_t> pos(n);
  for (vertex_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = v;
  }
  for (vertex_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (vertex_t i = 0; i < n; ++i) {
    const vertex_t v = order[i];
    if (trace) trace->activate(v);
    const edge_t base = g.offset(v);
    auto nbrs = g.neighbors(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      const vertex_t u = nbrs[j];
      ++metrics.adjacency_reads;
      if (trace) trace->touch_edge(base + j);
      if (deg[u] > deg[v]) {
        // Move u to the front of its bin, then shrink the bin past it.
        const vertex_t du = deg[u];
        const vertex_t pu = pos[u];
        const vertex_t pw = bin[du];
        const vertex_t w = order[pw];
        if (u != w) {
          order[pu] = w;
          order[pw] = u;
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  std::copy(deg.begin(), deg.end(), result.coreness.begin());
  metrics.iterations = 0;
  metrics.elapsed_ms = clock.elapsed_ms();
  return result;
}

}  // namespace kcore
