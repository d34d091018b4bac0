#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kcore/types.hpp"

namespace kcore {

class Graph;

/// Per-worker scalar counters, merged into Metrics at superstep boundaries.
struct WorkCounters {
  std::uint64_t atomic_rmw = 0;
  std::uint64_t adjacency_reads = 0;

  WorkCounters& operator+=(const WorkCounters& o) {
    atomic_rmw += o.atomic_rmw;
    adjacency_reads += o.adjacency_reads;
    return *this;
  }
};

/// Opt-in per-element counters. Histogram initialization is not traced; its
/// reads are reported in Metrics::setup_adjacency_reads instead.
struct Trace {
  std::vector<std::uint32_t> activations;    // per vertex: times processed as a frontier/active item
  std::vector<std::uint32_t> edge_accesses;  // per directed adjacency entry
  std::vector<std::uint32_t> cell_atomics;   // per vertex: RMWs on cells owned by the vertex

  Trace() = default;
  Trace(vertex_t n, edge_t directed_entries)
      : activations(n, 0), edge_accesses(directed_entries, 0), cell_atomics(n, 0) {}

  void activate(vertex_t v) { bump(activations[v]); }
  void touch_edge(edge_t e) { bump(edge_accesses[e]); }
  void touch_cell(vertex_t v) { bump(cell_atomics[v]); }

 private:
  static void bump(std::uint32_t& x) { std::atomic_ref<std::uint32_t>(x).fetch_add(1, std::memory_order_relaxed); }
};

/// Results of the brute-force checks enabled by debug_invariants.
struct InvariantReport {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  // Frontier precision: selected vertices that dropped vs. did not, and
  // vertices left out of a frontier although their estimate would drop.
  std::uint64_t frontier_selected = 0;
  std::uint64_t frontier_decreased = 0;
  std::uint64_t missed_decreases = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
  void fail(const std::string& what) {
    if (violations++ == 0) first_violation = what;
  }
};

struct Metrics {
  std::uint64_t iterations = 0;  // l1 for the peel family, l2 for the h-index family
  std::uint64_t supersteps = 0;  // barrier-separated drain cycles actually executed
  std::uint64_t atomic_rmw = 0;
  std::uint64_t adjacency_reads = 0;        // includes setup_adjacency_reads
  std::uint64_t setup_adjacency_reads = 0;  // one-off initialization passes
  double elapsed_ms = 0.0;
  std::optional<Trace> trace;
  std::optional<InvariantReport> invariants;

  void add(const WorkCounters& c) {
    atomic_rmw += c.atomic_rmw;
    adjacency_reads += c.adjacency_reads;
  }
};

struct CoreResult {
  std::vector<core_t> coreness;
  Metrics metrics;
  std::string algorithm;

  core_t k_max() const;
};

/// Vertices bucketed by activation count; fractions are over activated vertices.
struct ActivationReport {
  std::uint64_t activated = 0;
  std::uint64_t once = 0;
  std::uint64_t twice = 0;
  std::uint64_t three_to_five = 0;
  std::uint64_t more_than_five = 0;

  double fraction(std::uint64_t bucket) const {
    return activated == 0 ? 0.0 : static_cast<double>(bucket) / static_cast<double>(activated);
  }
};

/// Directed adjacency entries bucketed by access count; fractions are over all entries.
struct EdgeAccessReport {
  std::uint64_t entries = 0;
  std::uint64_t zero = 0;
  std::uint64_t once = 0;
  std::uint64_t twice = 0;
  std::uint64_t three_to_five = 0;
  std::uint64_t more_than_five = 0;
  std::uint64_t adjacency_reads = 0;

  double fraction(std::uint64_t bucket) const {
    return entries == 0 ? 0.0 : static_cast<double>(bucket) / static_cast<double>(entries);
  }
};

/// Both throw std::invalid_argument when the run was not traced.
ActivationReport activation_report(const Metrics& metrics);
EdgeAccessReport edge_access_report(const Metrics& metrics);

void print_activation_report(std::ostream& out, const ActivationReport& r);
void print_edge_access_report(std::ostream& out, const EdgeAccessReport& r);

enum class MetricsFormat { kJson, kCsv };

MetricsFormat parse_metrics_format(const std::string& name);

/// Stable-schema record: algorithm, graph, n, m, k_max, iterations,
/// atomic_rmw, adjacency_reads, elapsed_ms.
void emit_metrics(std::ostream& out, const CoreResult& result, const Graph& g,
                  const std::string& graph_name, MetricsFormat format);
void emit_csv_header(std::ostream& out);
void emit_csv_row(std::ostream& out, const CoreResult& result, const Graph& g,
                  const std::string& graph_name);

}  // namespace kcore
