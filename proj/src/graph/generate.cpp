#include "kcore/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kcore {
namespace {

using EdgeList = std::vector<std::pair<vertex_t, vertex_t>>;

// std:: distributions are implementation-defined; drawing doubles directly
// from the engine keeps a seed's output stable across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph erdos_renyi(const GraphSpec& spec) {
  if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("erdos-renyi: p must be in [0, 1]");
  std::mt19937_64 rng(spec.seed);
  EdgeList edges;
  for (vertex_t u = 0; u < spec.n; ++u) {
    for (vertex_t v = u + 1; v < spec.n; ++v) {
      if (uniform01(rng) < spec.p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(spec.n, edges);
}

// Miller-Hagberg skipping over weight-sorted vertices, O(n + m) expected.
Graph chung_lu(const GraphSpec& spec) {
  if (spec.exponent <= 2.0) throw std::invalid_argument("chung-lu: exponent must exceed 2");
  if (spec.average_degree <= 0.0) throw std::invalid_argument("chung-lu: average degree must be positive");
  const vertex_t n = spec.n;
  std::vector<double> w(n);
  const double alpha = 1.0 / (spec.exponent - 1.0);
  double total = 0.0;
  for (vertex_t i = 0; i < n; ++i) {
    w[i] = std::pow(static_cast<double>(i) + 1.0, -alpha);
    total += w[i];
  }
  const double scale = total > 0.0 ? spec.average_degree * n / total : 0.0;
  for (double& x : w) x = std::min(x * scale, static_cast<double>(n > 0 ? n - 1 : 0));
  double sum = 0.0;
  for (double x : w) sum += x;

  std::mt19937_64 rng(spec.seed);
  EdgeList edges;
  for (vertex_t u = 0; u + 1 < n; ++u) {
    std::uint64_t v = u + 1;
    double p = std::min(w[u] * w[v] / sum, 1.0);
    while (v < n && p > 0.0) {
      if (p < 1.0) {
        double r = uniform01(rng);
        v += static_cast<std::uint64_t>(std::floor(std::log1p(-r) / std::log1p(-p)));
      }
      if (v < n) {
        double q = std::min(w[u] * w[v] / sum, 1.0);
        if (uniform01(rng) < q / p) edges.emplace_back(u, static_cast<vertex_t>(v));
        p = q;
        ++v;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

// Hub 0, removers 1..n, then a (k+1)-clique. Each remover is tied to k-1
// clique members so it has degree exactly k; the hub takes k+m-n clique
// members as extra neighbors. Every vertex ends up with coreness k.
Graph star_tail(const GraphSpec& spec) {
  const std::uint32_t n = spec.n;
  const std::uint32_t m = spec.m;
  const std::uint32_t k = spec.k;
  if (k < 1 || m < 1 || n <= m || n > k + m) {
    throw std::invalid_argument("star-tail: requires k >= 1 and 1 <= m < n <= k + m");
  }
  const vertex_t hub = 0;
  const vertex_t clique_base = n + 1;
  const vertex_t clique_size = k + 1;
  EdgeList edges;
  for (vertex_t a = 0; a < clique_size; ++a) {
    for (vertex_t b = a + 1; b < clique_size; ++b) edges.emplace_back(clique_base + a, clique_base + b);
  }
  vertex_t next_member = 0;
  for (vertex_t r = 1; r <= n; ++r) {
    edges.emplace_back(hub, r);
    for (std::uint32_t i = 0; i + 1 < k; ++i) {
      edges.emplace_back(r, clique_base + next_member);
      next_member = (next_member + 1) % clique_size;
    }
  }
  for (vertex_t a = 0; a < k + m - n; ++a) edges.emplace_back(hub, clique_base + a);
  return Graph::from_edges(clique_base + clique_size, edges);
}

}  // namespace

GraphModel parse_graph_model(std::string_view name) {
  if (name == "er" || name == "erdos-renyi") return GraphModel::kErdosRenyi;
  if (name == "chung-lu" || name == "chung-lu-powerlaw" || name == "powerlaw") return GraphModel::kChungLu;
  if (name == "star-tail" || name == "star-tail-construction") return GraphModel::kStarTail;
  throw std::invalid_argument("unknown graph model '" + std::string(name) + "'");
}

Graph generate_graph(const GraphSpec& spec) {
  switch (spec.model) {
    case GraphModel::kErdosRenyi: return erdos_renyi(spec);
    case GraphModel::kChungLu: return chung_lu(spec);
    case GraphModel::kStarTail: return star_tail(spec);
  }
  throw std::invalid_argument("unknown graph model");
}

}  // namespace kcore
