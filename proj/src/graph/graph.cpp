#include "kcore/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kcore {

Graph Graph::from_edges(vertex_t n, std::span<const std::pair<vertex_t, vertex_t>> edges) {
  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("edge endpoint " + std::to_string(std::max(u, v)) +
                              " outside vertex range " + std::to_string(n));
    }
    if (u == v) continue;
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  std::vector<vertex_t> adj(g.offsets_.back());
  std::vector<edge_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[cursor[u]++] = v;
    adj[cursor[v]++] = u;
  }

  // Sort and dedup each list, then compact.
  std::vector<edge_t> compact(static_cast<std::size_t>(n) + 1, 0);
  edge_t out = 0;
  for (vertex_t v = 0; v < n; ++v) {
    auto first = adj.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = adj.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) adj[out++] = *it;
    compact[v + 1] = out;
  }
  adj.resize(out);
  adj.shrink_to_fit();
  g.adjacency_ = std::move(adj);
  g.offsets_ = std::move(compact);
  g.original_ids_.resize(n);
  std::iota(g.original_ids_.begin(), g.original_ids_.end(), std::uint64_t{0});
  return g;
}

vertex_t Graph::degree(vertex_t v) const {
  if (v >= num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return static_cast<vertex_t>(offsets_[v + 1] - offsets_[v]);
}

vertex_t Graph::max_degree() const {
  vertex_t best = 0;
  for (vertex_t v = 0; v < num_vertices(); ++v) {
    best = std::max(best, static_cast<vertex_t>(offsets_[v + 1] - offsets_[v]));
  }
  return best;
}

void Graph::set_original_ids(std::vector<std::uint64_t> ids) {
  if (ids.size() != num_vertices()) {
    throw std::invalid_argument("original id table size does not match vertex count");
  }
  original_ids_ = std::move(ids);
}

bool Graph::is_valid() const {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != adjacency_.size()) return false;
  if (adjacency_.size() % 2 != 0) return false;
  const vertex_t n = num_vertices();
  for (vertex_t v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) return false;
    auto nbrs = neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      vertex_t u = nbrs[i];
      if (u >= n || u == v) return false;
      if (i > 0 && nbrs[i - 1] >= u) return false;
      auto back = neighbors(u);
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  }
  return true;
}

}  // namespace kcore
