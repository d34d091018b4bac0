#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>

#include "kcore/engine.hpp"

namespace kcore::detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline CoreResult start_result(const Graph& g, const EngineOptions& opts, std::string name) {
  CoreResult r;
  r.algorithm = std::move(name);
  r.coreness.assign(g.num_vertices(), 0);
  if (opts.trace) r.metrics.trace.emplace(g.num_vertices(), g.adjacency().size());
  if (opts.debug_invariants) r.metrics.invariants.emplace();
  return r;
}

inline int worker_count(const EngineOptions& opts) { return opts.workers < 1 ? 1 : opts.workers; }

template <class T>
T relaxed_load(const T& x) {
  return std::atomic_ref<const T>(x).load(std::memory_order_relaxed);
}

template <class T>
void relaxed_store(T& x, T v) {
  std::atomic_ref<T>(x).store(v, std::memory_order_relaxed);
}

}  // namespace kcore::detail
