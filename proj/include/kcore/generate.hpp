#pragma once

#include <cstdint>
#include <string_view>

#include "kcore/graph.hpp"

namespace kcore {

enum class GraphModel { kErdosRenyi, kChungLu, kStarTail };

GraphModel parse_graph_model(std::string_view name);

/// Generator parameters. The seed fully determines the output.
///
/// kErdosRenyi: `n` vertices, each pair independently with probability `p`.
/// kChungLu: `n` vertices, expected degrees follow a power law with the given
///   `exponent`, scaled to `average_degree`.
/// kStarTail: a hub whose residual degree is k+m when `n` of its neighbors are
///   peeled in the same level-k round, so n-m of those removals drive it
///   below k. Requires 1 <= k, m < n <= k+m. The hub is vertex 0 and the n
///   removers are vertices 1..n.
struct GraphSpec {
  GraphModel model = GraphModel::kErdosRenyi;
  std::uint32_t n = 0;
  double p = 0.0;
  double exponent = 2.5;
  double average_degree = 8.0;
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on parameters outside the model's domain.
Graph generate_graph(const GraphSpec& spec);

}  // namespace kcore
