#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kcore/types.hpp"

namespace kcore {

/// Undirected simple graph in CSR form. Every undirected edge is stored in
/// both endpoints' lists; each list is sorted ascending with no self-loops
/// and no duplicates. Immutable once built.
class Graph {
 public:
  Graph() : offsets_{0} {}

  /// Normalizes an arbitrary edge list over ids [0, n): drops self-loops,
  /// merges duplicates and ignores direction.
  static Graph from_edges(vertex_t n, std::span<const std::pair<vertex_t, vertex_t>> edges);

  vertex_t num_vertices() const { return static_cast<vertex_t>(offsets_.size() - 1); }
  edge_t num_edges() const { return adjacency_.size() / 2; }

  /// Throws std::out_of_range for v >= num_vertices().
  vertex_t degree(vertex_t v) const;

  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  edge_t offset(vertex_t v) const { return offsets_[v]; }

  std::span<const edge_t> offsets() const { return offsets_; }
  std::span<const vertex_t> adjacency() const { return adjacency_; }

  vertex_t max_degree() const;

  /// External id of every vertex (identity unless set by a loader).
  std::span<const std::uint64_t> original_ids() const { return original_ids_; }
  void set_original_ids(std::vector<std::uint64_t> ids);

  /// Full structural check: offsets, sortedness, self-loops, symmetry.
  bool is_valid() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<edge_t> offsets_;
  std::vector<vertex_t> adjacency_;
  std::vector<std::uint64_t> original_ids_;
};

}  // namespace kcore
