#include "kcore/frontier.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace kcore {

FrontierQueue::FrontierQueue(vertex_t capacity) : epoch_of_(capacity), items_(capacity) {
  for (auto& e : epoch_of_) e.store(0, std::memory_order_relaxed);
  for (auto& it : items_) it.store(kNoVertex, std::memory_order_relaxed);
}

bool FrontierQueue::push(vertex_t v) {
  if (v >= epoch_of_.size()) {
    throw std::out_of_range("frontier push of vertex " + std::to_string(v) + " out of range");
  }
  if (epoch_of_[v].exchange(epoch_, std::memory_order_acq_rel) == epoch_) return false;
  const std::size_t slot = tail_.fetch_add(1, std::memory_order_acq_rel);
  items_[slot].store(v, std::memory_order_release);
  return true;
}

std::vector<vertex_t> FrontierQueue::drain() {
  const std::size_t n = tail_.load(std::memory_order_acquire);
  std::vector<vertex_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = wait_item(i);
    items_[i].store(kNoVertex, std::memory_order_relaxed);
  }
  tail_.store(0, std::memory_order_release);
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    for (auto& e : epoch_of_) e.store(0, std::memory_order_relaxed);
    epoch_ = 1;
  } else {
    ++epoch_;
  }
  return out;
}

vertex_t FrontierQueue::wait_item(std::size_t index) const {
  vertex_t v;
  while ((v = items_[index].load(std::memory_order_acquire)) == kNoVertex) std::this_thread::yield();
  return v;
}

}  // namespace kcore
