#pragma once

#include <span>
#include <string>
#include <vector>

#include "kcore/graph.hpp"
#include "kcore/hindex.hpp"
#include "kcore/metrics.hpp"

namespace kcore::detail {

// Full sweep: every vertex left out of the upcoming frontier must be stable
// under one synchronous h-index step.
template <class Selected>
void check_no_missed_decrease(const Graph& g, std::span<const core_t> core, Selected&& selected,
                              InvariantReport& report) {
  ++report.checks;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (core[v] == 0 || selected(v)) continue;
    if (neighbor_h_index(g, core, v, core[v]) < core[v]) {
      ++report.missed_decreases;
      report.fail("vertex " + std::to_string(v) + " would drop but was not selected");
    }
  }
}

// coreness <= core^t <= core^(t-1).
inline void check_estimate_bounds(std::span<const core_t> core, std::vector<core_t>& previous,
                                  std::span<const core_t> exact, InvariantReport& report) {
  ++report.checks;
  for (std::size_t v = 0; v < core.size(); ++v) {
    if (core[v] > previous[v] || core[v] < exact[v]) {
      report.fail("vertex " + std::to_string(v) + " estimate " + std::to_string(core[v]) +
                  " outside [" + std::to_string(exact[v]) + ", " + std::to_string(previous[v]) + "]");
      break;
    }
  }
  previous.assign(core.begin(), core.end());
}

inline void record_selection(InvariantReport& report, vertex_t v, core_t before, core_t after) {
  ++report.frontier_selected;
  if (after < before) {
    ++report.frontier_decreased;
  } else {
    report.fail("frontier vertex " + std::to_string(v) + " did not decrease");
  }
}

// Rebuilds every vertex's expected histogram from the current estimates.
inline void check_histograms(const Graph& g, const HistogramStore& store, InvariantReport& report) {
  ++report.checks;
  auto core = store.core();
  std::vector<std::int64_t> expected;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    const core_t cv = core[v];
    if (cv == 0) continue;
    expected.assign(static_cast<std::size_t>(cv) + 1, 0);
    for (vertex_t u : g.neighbors(v)) ++expected[std::min(core[u], cv)];
    for (core_t j = 1; j <= cv; ++j) {
      if (store.slot(v, j) != expected[j]) {
        report.fail("histogram of vertex " + std::to_string(v) + " slot " + std::to_string(j) + " holds " +
                    std::to_string(store.slot(v, j)) + ", expected " + std::to_string(expected[j]));
        return;
      }
    }
  }
}

}  // namespace kcore::detail
