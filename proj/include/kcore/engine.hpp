#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kcore/graph.hpp"
#include "kcore/metrics.hpp"

namespace kcore {

struct EngineOptions {
  int workers = 1;
  /// Collect per-vertex and per-entry counters (O(n + m) extra memory).
  bool trace = false;
  /// Run the O(n + m) brute-force checks at every superstep boundary and
  /// record the outcome in Metrics::invariants.
  bool debug_invariants = false;
};

enum class Algorithm { kBz, kGpp, kPeelOne, kPpDyn, kPoDyn, kNbrCore, kCntCore, kHistoCore };

/// Accepts the CLI names: bz, gpp, peelone, pp-dyn, po-dyn, nbrcore, cntcore,
/// histocore. Throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string algorithm_name(Algorithm a);
std::vector<Algorithm> all_algorithms();
std::vector<Algorithm> parallel_algorithms();

CoreResult run_algorithm(Algorithm a, const Graph& g, const EngineOptions& opts = {});

}  // namespace kcore
